#ifndef FREEHARM_TESTS_EXEC_HPP
#define FREEHARM_TESTS_EXEC_HPP

#include <array>
#include <cstdio>
#include <string>

#include <sys/wait.h>

namespace testutil {

struct ExecResult {
    int status = -1;
    std::string out;
};

// Runs a shell command, capturing stdout; stderr is discarded.
inline ExecResult run_cli(const std::string& command) {
    ExecResult r;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int rc = pclose(pipe);
    if (WIFEXITED(rc)) r.status = WEXITSTATUS(rc);
    return r;
}

inline std::string shell_quote(const std::string& s) {
    std::string o = "'";
    for (char c : s) {
        if (c == '\'') o += "'\\''";
        else o.push_back(c);
    }
    o.push_back('\'');
    return o;
}

}  // namespace testutil

#endif
