#pragma once

#include <iosfwd>
#include <string>

#include "core/corpus/index.hpp"
#include "core/metrics/report.hpp"
#include "core/pipeline/config.hpp"
#include "core/pipeline/evaluator.hpp"

namespace gambitlab {

// Full analysis of one configured gambit: mainline evaluation trace, corpus
// continuations, distribution statistics and classification. Throws on
// engine/corpus/config problems.
GambitReport analyze_gambit(const GambitSpecDef& spec, const RunConfig& cfg,
                            Evaluator& evaluator, const CorpusIndex& corpus);

// Loads cfg.corpus_path, accepting either a PGN collection (indexed on the
// fly) or a prebuilt index file. Throws CorpusError when missing/unreadable.
CorpusIndex load_corpus(const RunConfig& cfg);

// Command entry points. Each returns a process exit code and reports
// human-readable progress on `out` and failures on `err`; they never throw.
int cmd_analyze(const RunConfig& cfg, const std::string& gambit_name, std::ostream& out,
                std::ostream& err);
int cmd_rank(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_corpus_build(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_selfcheck(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace gambitlab
