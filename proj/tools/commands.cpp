#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>

namespace rotcli {

using namespace rotfuse;

namespace {

void emit(const RotationRecord& rec, const IoOpts& io) {
  std::cout << format_record(rec, io.deg, io.json) << '\n';
}

// Runs fn on the --value record, or on every nonempty stdin line.
void for_each_record(const std::optional<std::string>& value, Repr repr, const IoOpts& io,
                     const std::function<void(const RotationRecord&)>& fn) {
  if (value) {
    fn(parse_record(*value, repr, io.deg));
    return;
  }
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    fn(parse_record(line, repr, io.deg));
  }
}

std::pair<Quat, Quat> two_operands(const std::vector<std::string>& values, Repr repr,
                                   const IoOpts& io, const char* cmd) {
  if (values.size() != 2)
    throw ParseFailure(std::string(cmd) + " needs exactly two --value records");
  return {record_to_quat(parse_record(values[0], repr, io.deg)),
          record_to_quat(parse_record(values[1], repr, io.deg))};
}

}  // namespace

int cmd_convert(const std::optional<std::string>& value, Repr from, Repr to, const IoOpts& io) {
  for_each_record(value, from, io, [&](const RotationRecord& rec) {
    emit(quat_to_record(record_to_quat(rec), to), io);
  });
  return 0;
}

int cmd_inverse(const std::optional<std::string>& value, Repr repr, const IoOpts& io) {
  for_each_record(value, repr, io, [&](const RotationRecord& rec) {
    // Output in the record's own repr, which a JSON record may have chosen.
    emit(quat_to_record(record_to_quat(rec).conjugate(), rec.repr), io);
  });
  return 0;
}

int cmd_remove_yaw(const std::optional<std::string>& value, Repr repr, const IoOpts& io) {
  for_each_record(value, repr, io, [&](const RotationRecord& rec) {
    emit(quat_to_record(remove_yaw(record_to_quat(rec)), rec.repr), io);
  });
  return 0;
}

int cmd_compose(const std::vector<std::string>& values, Repr repr, const IoOpts& io) {
  const auto [a, b] = two_operands(values, repr, io, "compose");
  emit(quat_to_record(compose(a, b), repr), io);
  return 0;
}

int cmd_metric(const std::vector<std::string>& values, Repr repr, const std::string& kind,
               const IoOpts& io) {
  const auto [a, b] = two_operands(values, repr, io, "metric");
  const double d = kind == "dR" ? metric_dR(a, b) : metric_dL(a, b);
  std::cout << format_scalar(d) << '\n';
  return 0;
}

int cmd_slerp(const std::vector<std::string>& values, Repr repr, double t, const IoOpts& io) {
  const auto [a, b] = two_operands(values, repr, io, "slerp");
  emit(quat_to_record(slerp(a, b, t), repr), io);
  return 0;
}

namespace {

void csv_row(double x, double y, double z) {
  std::cout << format_scalar(x) << ',' << format_scalar(y) << ',' << format_scalar(z) << '\n';
}

}  // namespace

int cmd_loci(const std::optional<double>& pitch, const std::optional<double>& roll,
             const std::optional<int>& hemi, int samples, bool deg) {
  const int picked = (pitch ? 1 : 0) + (roll ? 1 : 0) + (hemi ? 1 : 0);
  if (picked != 1) throw ParseFailure("loci needs exactly one of --pitch, --roll, --hemi");
  if (samples < 3) throw ParseFailure("loci needs --samples of at least 3");

  std::cout << "x,y,z\n";
  if (pitch || roll) {
    double angle = pitch ? *pitch : *roll;
    if (deg) angle = deg_to_rad(angle);
    if (!(std::abs(angle) <= kHalfPi))
      throw DomainError(pitch ? "pitch outside [-pi/2, pi/2]" : "roll outside [-pi/2, pi/2]");
    // Locus of the global z axis in body coordinates at constant fused pitch
    // (x component pinned) or constant fused roll (y component pinned).
    const double s = std::sin(angle), c = std::cos(angle);
    for (int k = 0; k < samples; ++k) {
      const double t = kTwoPi * k / samples;
      if (pitch)
        csv_row(-s, c * std::cos(t), c * std::sin(t));
      else
        csv_row(c * std::cos(t), s, c * std::sin(t));
    }
    return 0;
  }

  if (*hemi != 1 && *hemi != -1) throw DomainError("hemisphere must be 1 or -1");
  // The hemisphere locus is a half sphere; emit its boundary circle plus the
  // pole that names the hemisphere.
  for (int k = 0; k < samples - 1; ++k) {
    const double t = kTwoPi * k / (samples - 1);
    csv_row(std::cos(t), std::sin(t), 0.0);
  }
  csv_row(0.0, 0.0, static_cast<double>(*hemi));
  return 0;
}

int cmd_demo_yaw_compare(int count, std::uint64_t seed) {
  if (count < 1) throw ParseFailure("demo needs a positive -n");
  std::mt19937_64 gen(seed);

  // Re-choosing the global x and y axes conjugates every rotation by a z
  // rotation. Fused yaw is invariant under that; Euler ZYX yaw is not.
  std::cout << "sample max_abs_dpsi_fused max_abs_dpsi_euler\n";
  double worst_fused = 0.0, worst_euler = 0.0;
  for (int i = 0; i < count; ++i) {
    const Quat q = random_rotation(gen);
    const double psi_f = fused_yaw(q);
    const double psi_e = quat_to_euler_zyx(q).yaw;
    double max_f = 0.0, max_e = 0.0;
    for (int j = 0; j < 24; ++j) {
      const double beta = -kPi + kTwoPi * (j + 0.5) / 24.0;
      const Quat qc = Quat::rot_z(beta) * q * Quat::rot_z(-beta);
      max_f = std::max(max_f, std::abs(wrap(fused_yaw(qc) - psi_f)));
      max_e = std::max(max_e, std::abs(wrap(quat_to_euler_zyx(qc).yaw - psi_e)));
    }
    std::cout << i << ' ' << format_scalar(max_f) << ' ' << format_scalar(max_e) << '\n';
    worst_fused = std::max(worst_fused, max_f);
    worst_euler = std::max(worst_euler, max_e);
  }
  std::cout << "overall " << format_scalar(worst_fused) << ' ' << format_scalar(worst_euler)
            << '\n';
  return 0;
}

int cmd_random(int count, std::uint64_t seed, Repr repr, const IoOpts& io) {
  if (count < 1) throw ParseFailure("random needs a positive -n");
  std::mt19937_64 gen(seed);
  for (int i = 0; i < count; ++i) emit(quat_to_record(random_rotation(gen), repr), io);
  return 0;
}

}  // namespace rotcli
