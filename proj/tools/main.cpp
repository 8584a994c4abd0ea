// Command line front end. Exit codes: 0 success, 2 malformed arguments or
// records, 3 domain violations reported by the library.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "record.hpp"

namespace {

const std::vector<std::string> kReprTokens{"quat", "rotmat", "tilt",
                                           "fused", "euler",  "axisangle"};

struct RecordOpts {
  std::string value;
  CLI::Option* value_opt = nullptr;
  std::string repr = "quat";
  bool deg = false;
  bool json = false;

  std::optional<std::string> maybe_value() const {
    if (value_opt != nullptr && value_opt->count() > 0) return value;
    return std::nullopt;
  }
  rotcli::IoOpts io() const { return {deg, json}; }
};

void add_record_opts(CLI::App* sub, RecordOpts& o, bool with_repr) {
  o.value_opt =
      sub->add_option("--value", o.value, "rotation record; omit to read records from stdin");
  if (with_repr)
    sub->add_option("--repr", o.repr, "record representation")
        ->check(CLI::IsMember(kReprTokens));
  sub->add_flag("--deg", o.deg, "angle fields in degrees");
  sub->add_flag("--json", o.json, "emit JSON records");
}

struct PairOpts {
  std::vector<std::string> values;
  std::string repr = "quat";
  bool deg = false;
  bool json = false;

  rotcli::IoOpts io() const { return {deg, json}; }
};

void add_pair_opts(CLI::App* sub, PairOpts& o) {
  sub->add_option("--value", o.values, "two rotation records");
  sub->add_option("--repr", o.repr, "record representation")->check(CLI::IsMember(kReprTokens));
  sub->add_flag("--deg", o.deg, "angle fields in degrees");
  sub->add_flag("--json", o.json, "emit JSON records");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fused angles rotation toolkit"};
  app.require_subcommand(1);

  auto* conv = app.add_subcommand("convert", "convert a rotation between representations");
  std::string conv_from, conv_to;
  RecordOpts conv_opts;
  conv->add_option("--from", conv_from, "input representation")
      ->required()
      ->check(CLI::IsMember(kReprTokens));
  conv->add_option("--to", conv_to, "output representation")
      ->required()
      ->check(CLI::IsMember(kReprTokens));
  add_record_opts(conv, conv_opts, false);

  auto* ops = app.add_subcommand("ops", "rotation operations");
  ops->require_subcommand(1);

  auto* inv = ops->add_subcommand("inverse", "invert a rotation");
  RecordOpts inv_opts;
  add_record_opts(inv, inv_opts, true);

  auto* ryaw = ops->add_subcommand("remove-yaw", "strip the fused yaw component");
  RecordOpts ryaw_opts;
  add_record_opts(ryaw, ryaw_opts, true);

  auto* comp = ops->add_subcommand("compose", "compose two rotations, first applied last");
  PairOpts comp_opts;
  add_pair_opts(comp, comp_opts);

  auto* met = ops->add_subcommand("metric", "distance between two rotations");
  PairOpts met_opts;
  std::string met_kind;
  met->add_option("--kind", met_kind, "dR (radians) or dL (dimensionless)")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>{"dR", "dL"}));
  add_pair_opts(met, met_opts);

  auto* sl = ops->add_subcommand("slerp", "interpolate between two rotations");
  PairOpts sl_opts;
  double sl_t = 0.0;
  sl->add_option("--t", sl_t, "interpolation parameter in [0, 1]")->required();
  add_pair_opts(sl, sl_opts);

  auto* loci = app.add_subcommand("loci", "sample a constant-parameter locus as CSV");
  double loci_pitch = 0.0, loci_roll = 0.0;
  int loci_hemi = 1, loci_samples = 64;
  bool loci_deg = false;
  CLI::Option* loci_pitch_opt = loci->add_option("--pitch", loci_pitch, "constant fused pitch");
  CLI::Option* loci_roll_opt = loci->add_option("--roll", loci_roll, "constant fused roll");
  CLI::Option* loci_hemi_opt = loci->add_option("--hemi", loci_hemi, "hemisphere, 1 or -1");
  loci->add_option("--samples", loci_samples, "number of rows, at least 3");
  loci->add_flag("--deg", loci_deg, "pitch/roll given in degrees");

  auto* demo = app.add_subcommand("demo-yaw-compare",
                                  "yaw stability under re-choice of the global x/y axes");
  int demo_n = 16;
  std::uint64_t demo_seed = 0;
  demo->add_option("-n,--count", demo_n, "number of sample rotations");
  demo->add_option("--seed", demo_seed, "generator seed");

  auto* rnd = app.add_subcommand("random", "emit uniformly random rotations");
  int rnd_n = 1;
  std::uint64_t rnd_seed = 0;
  RecordOpts rnd_opts;
  rnd->add_option("-n,--count", rnd_n, "number of records");
  rnd->add_option("--seed", rnd_seed, "generator seed");
  rnd->add_option("--repr", rnd_opts.repr, "output representation")
      ->check(CLI::IsMember(kReprTokens));
  rnd->add_flag("--deg", rnd_opts.deg, "angle fields in degrees");
  rnd->add_flag("--json", rnd_opts.json, "emit JSON records");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    using namespace rotcli;
    if (app.got_subcommand(conv))
      return cmd_convert(conv_opts.maybe_value(), repr_from_token(conv_from),
                         repr_from_token(conv_to), conv_opts.io());
    if (app.got_subcommand(ops)) {
      if (ops->got_subcommand(inv))
        return cmd_inverse(inv_opts.maybe_value(), repr_from_token(inv_opts.repr), inv_opts.io());
      if (ops->got_subcommand(ryaw))
        return cmd_remove_yaw(ryaw_opts.maybe_value(), repr_from_token(ryaw_opts.repr),
                              ryaw_opts.io());
      if (ops->got_subcommand(comp))
        return cmd_compose(comp_opts.values, repr_from_token(comp_opts.repr), comp_opts.io());
      if (ops->got_subcommand(met))
        return cmd_metric(met_opts.values, repr_from_token(met_opts.repr), met_kind,
                          met_opts.io());
      if (ops->got_subcommand(sl))
        return cmd_slerp(sl_opts.values, repr_from_token(sl_opts.repr), sl_t, sl_opts.io());
    }
    if (app.got_subcommand(loci)) {
      std::optional<double> pitch, roll;
      std::optional<int> hemi;
      if (loci_pitch_opt->count() > 0) pitch = loci_pitch;
      if (loci_roll_opt->count() > 0) roll = loci_roll;
      if (loci_hemi_opt->count() > 0) hemi = loci_hemi;
      return cmd_loci(pitch, roll, hemi, loci_samples, loci_deg);
    }
    if (app.got_subcommand(demo)) return cmd_demo_yaw_compare(demo_n, demo_seed);
    if (app.got_subcommand(rnd))
      return cmd_random(rnd_n, rnd_seed, repr_from_token(rnd_opts.repr), rnd_opts.io());
  } catch (const rotcli::ParseFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const rotfuse::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }

  std::cerr << "error: no command selected\n";
  return 2;
}
