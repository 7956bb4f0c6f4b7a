#include "support/subprocess.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#ifndef _WIN32
#include <sys/wait.h>
#endif

namespace testsup {

namespace {

std::string read_and_remove(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    in.close();
    std::error_code ec;
    std::filesystem::remove(path, ec);
    return buffer.str();
}

int decode_exit(int raw) {
#ifdef _WIN32
    return raw;
#else
    if (WIFEXITED(raw)) return WEXITSTATUS(raw);
    if (WIFSIGNALED(raw)) return 128 + WTERMSIG(raw);
    return raw;
#endif
}

}  // namespace

CommandResult run_command(const std::string& command) {
    static int counter = 0;
    auto tmp = std::filesystem::temp_directory_path();
    auto out_path = tmp / ("slx_cmd_out_" + std::to_string(++counter) + ".txt");
    auto err_path = tmp / ("slx_cmd_err_" + std::to_string(counter) + ".txt");

    std::string wrapped =
        command + " > " + out_path.string() + " 2> " + err_path.string();
    int raw = std::system(wrapped.c_str());

    CommandResult result;
    result.exit_code = decode_exit(raw);
    result.out = read_and_remove(out_path);
    result.err = read_and_remove(err_path);
    return result;
}

}  // namespace testsup
