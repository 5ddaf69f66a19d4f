#pragma once

#include <string>
#include <vector>

namespace gambitlab {

// A child process with line-oriented stdin/stdout pipes. Used to drive
// engine executables; all waits are bounded by caller-supplied timeouts.
class ChildProcess {
public:
    // Spawns argv[0] with the given arguments. Throws EngineError when the
    // executable cannot be started.
    explicit ChildProcess(const std::vector<std::string>& argv);
    ~ChildProcess();

    ChildProcess(const ChildProcess&) = delete;
    ChildProcess& operator=(const ChildProcess&) = delete;

    // Sends one line (newline appended). Throws EngineError on a broken pipe.
    void write_line(const std::string& line);

    // Reads the next full line, waiting up to `timeout_ms`. Returns false on
    // timeout or end of stream (child exited).
    bool read_line(std::string& out, int timeout_ms);

    bool running();

    // Closes pipes and reaps the child, escalating to SIGKILL if it ignores
    // the grace period.
    void shutdown();

private:
    int pid_ = -1;
    int to_child_ = -1;
    int from_child_ = -1;
    std::string buffer_;
    bool reaped_ = false;
};

}  // namespace gambitlab
