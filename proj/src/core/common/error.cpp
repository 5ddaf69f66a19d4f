#include "core/common/error.hpp"

// The hierarchy is header-only; this translation unit anchors the vtable.

namespace gambitlab {

static_assert(kOk == 0 && kPartialFailure == 5, "exit codes are part of the CLI contract");

}  // namespace gambitlab
