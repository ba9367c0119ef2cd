#pragma once

#include <filesystem>
#include <string>

#include "rigging/support.hpp"

namespace rigging::cli {

// Exit codes are a stable contract.
inline constexpr int kOk = 0;        // accept / no conflict
inline constexpr int kReject = 1;    // verification failure
inline constexpr int kBadInput = 2;  // unreadable or malformed input
inline constexpr int kConflict = 3;  // misalignment or successor conflict

struct Options {
    std::filesystem::path store;
    std::uint64_t seed = 0;
    int k = 3;
    bool assume_valid = false;
    bool json = false;
};

int cmd_demo(const std::string& scenario, const Options& opts);
int cmd_verify(const std::filesystem::path& rig_file, const Options& opts);
int cmd_check_conflict(const std::filesystem::path& rig_a, const std::filesystem::path& rig_b,
                       const Options& opts);
int cmd_inspect(const std::string& hex, const Options& opts);

/// Full argv entry point (the binary's main defers here).
int run(int argc, const char* const* argv);

}  // namespace rigging::cli
