// Runs the command-line tool in a subprocess and captures stdout.
#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <unistd.h>

namespace qtest {

struct CliRun {
    int code = -1;
    std::string out;
};

inline CliRun run_cli(const std::string& args, bool with_stderr = false)
{
    std::string cmd = std::string(QVERIFY_CLI) + " " + args + (with_stderr ? " 2>&1" : " 2>/dev/null");
    CliRun r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

inline std::filesystem::path write_temp(const std::string& name, const std::string& text)
{
    auto path = std::filesystem::temp_directory_path() / ("qverify_" + std::to_string(::getpid()) + "_" + name);
    std::ofstream(path) << text;
    return path;
}

} // namespace qtest
