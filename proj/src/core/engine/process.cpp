#include "core/engine/process.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>
#include <thread>

#include "core/common/error.hpp"

namespace gambitlab {

namespace {

std::string join_argv(const std::vector<std::string>& argv) {
    std::string out;
    for (const std::string& a : argv) {
        if (!out.empty()) out += ' ';
        out += a;
    }
    return out;
}

}  // namespace

ChildProcess::ChildProcess(const std::vector<std::string>& argv) {
    if (argv.empty()) throw EngineError("empty engine command line");

    int in_pipe[2];   // parent -> child stdin
    int out_pipe[2];  // child stdout -> parent
    if (pipe(in_pipe) != 0 || pipe(out_pipe) != 0) {
        throw EngineError("pipe() failed: " + std::string(std::strerror(errno)));
    }

    // A self-pipe with CLOEXEC reports exec failure back to the parent:
    // if exec succeeds the pipe closes silently, otherwise errno arrives.
    int exec_pipe[2];
    if (pipe2(exec_pipe, O_CLOEXEC) != 0) {
        throw EngineError("pipe2() failed: " + std::string(std::strerror(errno)));
    }

    const int pid = fork();
    if (pid < 0) {
        throw EngineError("fork() failed: " + std::string(std::strerror(errno)));
    }

    if (pid == 0) {
        dup2(in_pipe[0], STDIN_FILENO);
        dup2(out_pipe[1], STDOUT_FILENO);
        close(in_pipe[0]);
        close(in_pipe[1]);
        close(out_pipe[0]);
        close(out_pipe[1]);
        close(exec_pipe[0]);

        std::vector<char*> cargv;
        cargv.reserve(argv.size() + 1);
        for (const std::string& a : argv) cargv.push_back(const_cast<char*>(a.c_str()));
        cargv.push_back(nullptr);
        execvp(cargv[0], cargv.data());

        const int err = errno;
        ssize_t ignored = write(exec_pipe[1], &err, sizeof(err));
        (void)ignored;
        _exit(127);
    }

    close(in_pipe[0]);
    close(out_pipe[1]);
    close(exec_pipe[1]);
    pid_ = pid;
    to_child_ = in_pipe[1];
    from_child_ = out_pipe[0];

    int exec_errno = 0;
    const ssize_t n = read(exec_pipe[0], &exec_errno, sizeof(exec_errno));
    close(exec_pipe[0]);
    if (n > 0) {
        shutdown();
        throw EngineError("cannot start engine '" + join_argv(argv) +
                          "': " + std::strerror(exec_errno));
    }

    // Writes to a dead child must surface as EngineError, not kill the process.
    signal(SIGPIPE, SIG_IGN);
}

ChildProcess::~ChildProcess() {
    try {
        shutdown();
    } catch (...) {
        // Destructor must not throw.
    }
}

void ChildProcess::write_line(const std::string& line) {
    if (to_child_ < 0) throw EngineError("engine stdin already closed");
    std::string data = line;
    data += '\n';
    size_t off = 0;
    while (off < data.size()) {
        const ssize_t n = write(to_child_, data.data() + off, data.size() - off);
        if (n < 0) {
            if (errno == EINTR) continue;
            throw EngineError("engine pipe write failed: " +
                              std::string(std::strerror(errno)));
        }
        off += static_cast<size_t>(n);
    }
}

bool ChildProcess::read_line(std::string& out, int timeout_ms) {
    const auto deadline =
        std::chrono::steady_clock::now() + std::chrono::milliseconds(timeout_ms);

    while (true) {
        const size_t nl = buffer_.find('\n');
        if (nl != std::string::npos) {
            out = buffer_.substr(0, nl);
            if (!out.empty() && out.back() == '\r') out.pop_back();
            buffer_.erase(0, nl + 1);
            return true;
        }
        if (from_child_ < 0) return false;

        const auto now = std::chrono::steady_clock::now();
        const auto left =
            std::chrono::duration_cast<std::chrono::milliseconds>(deadline - now).count();
        if (left <= 0) return false;

        pollfd pfd{from_child_, POLLIN, 0};
        const int rc = poll(&pfd, 1, static_cast<int>(left));
        if (rc < 0) {
            if (errno == EINTR) continue;
            throw EngineError("poll() failed: " + std::string(std::strerror(errno)));
        }
        if (rc == 0) return false;  // timeout

        char chunk[4096];
        const ssize_t n = read(from_child_, chunk, sizeof(chunk));
        if (n < 0) {
            if (errno == EINTR) continue;
            throw EngineError("engine pipe read failed: " +
                              std::string(std::strerror(errno)));
        }
        if (n == 0) {  // stream closed; drain whatever is buffered
            close(from_child_);
            from_child_ = -1;
            if (!buffer_.empty() && buffer_.find('\n') == std::string::npos) {
                out = buffer_;
                buffer_.clear();
                return true;
            }
            continue;
        }
        buffer_.append(chunk, static_cast<size_t>(n));
    }
}

bool ChildProcess::running() {
    if (pid_ < 0 || reaped_) return false;
    int status = 0;
    const int rc = waitpid(pid_, &status, WNOHANG);
    if (rc == pid_) {
        reaped_ = true;
        return false;
    }
    return rc == 0;
}

void ChildProcess::shutdown() {
    if (to_child_ >= 0) {
        close(to_child_);
        to_child_ = -1;
    }
    if (from_child_ >= 0) {
        close(from_child_);
        from_child_ = -1;
    }
    if (pid_ >= 0 && !reaped_) {
        // Closing stdin is the polite quit signal; give the child a moment.
        const auto deadline =
            std::chrono::steady_clock::now() + std::chrono::milliseconds(2000);
        while (std::chrono::steady_clock::now() < deadline) {
            int status = 0;
            if (waitpid(pid_, &status, WNOHANG) == pid_) {
                reaped_ = true;
                break;
            }
            std::this_thread::sleep_for(std::chrono::milliseconds(10));
        }
        if (!reaped_) {
            kill(pid_, SIGKILL);
            int status = 0;
            waitpid(pid_, &status, 0);
            reaped_ = true;
        }
    }
    pid_ = -1;
}

}  // namespace gambitlab
