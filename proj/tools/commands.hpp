#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "record.hpp"

namespace rotcli {

struct IoOpts {
  bool deg = false;
  bool json = false;
};

// Each command returns the process exit code for the success path; errors are
// reported by throwing ParseFailure (exit 2) or rotfuse::DomainError (exit 3).
// A missing --value switches the unary commands to one-record-per-line stdin.

int cmd_convert(const std::optional<std::string>& value, Repr from, Repr to, const IoOpts& io);
int cmd_inverse(const std::optional<std::string>& value, Repr repr, const IoOpts& io);
int cmd_remove_yaw(const std::optional<std::string>& value, Repr repr, const IoOpts& io);
int cmd_compose(const std::vector<std::string>& values, Repr repr, const IoOpts& io);
int cmd_metric(const std::vector<std::string>& values, Repr repr, const std::string& kind,
               const IoOpts& io);
int cmd_slerp(const std::vector<std::string>& values, Repr repr, double t, const IoOpts& io);
int cmd_loci(const std::optional<double>& pitch, const std::optional<double>& roll,
             const std::optional<int>& hemi, int samples, bool deg);
int cmd_demo_yaw_compare(int count, std::uint64_t seed);
int cmd_random(int count, std::uint64_t seed, Repr repr, const IoOpts& io);

}  // namespace rotcli
