#include "record.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace rotcli {

using rotfuse::DomainError;

Repr repr_from_token(const std::string& token) {
  if (token == "quat") return Repr::quat;
  if (token == "rotmat") return Repr::rotmat;
  if (token == "tilt") return Repr::tilt;
  if (token == "fused") return Repr::fused;
  if (token == "euler") return Repr::euler;
  if (token == "axisangle") return Repr::axisangle;
  throw ParseFailure("unknown representation '" + token + "'");
}

const char* repr_token(Repr repr) {
  switch (repr) {
    case Repr::quat: return "quat";
    case Repr::rotmat: return "rotmat";
    case Repr::tilt: return "tilt";
    case Repr::fused: return "fused";
    case Repr::euler: return "euler";
    case Repr::axisangle: return "axisangle";
  }
  return "?";
}

std::size_t repr_arity(Repr repr) {
  switch (repr) {
    case Repr::quat: return 4;
    case Repr::rotmat: return 9;
    case Repr::tilt: return 3;
    case Repr::fused: return 4;
    case Repr::euler: return 3;
    case Repr::axisangle: return 4;
  }
  return 0;
}

namespace {

bool is_angle_field(Repr repr, std::size_t i) {
  switch (repr) {
    case Repr::quat:
    case Repr::rotmat: return false;
    case Repr::tilt:
    case Repr::euler: return true;
    case Repr::fused: return i < 3;        // h is a hemisphere token, not an angle
    case Repr::axisangle: return i == 3;   // axis components are unitless
  }
  return false;
}

void scale_in_place(RotationRecord& rec, double factor_kind) {
  for (std::size_t i = 0; i < rec.values.size(); ++i)
    if (is_angle_field(rec.repr, i))
      rec.values[i] = factor_kind > 0 ? rotfuse::deg_to_rad(rec.values[i])
                                      : rotfuse::rad_to_deg(rec.values[i]);
}

void check_arity(const RotationRecord& rec) {
  const std::size_t want = repr_arity(rec.repr);
  if (rec.values.size() != want)
    throw ParseFailure("expected " + std::to_string(want) + " values for '" +
                       repr_token(rec.repr) + "', got " + std::to_string(rec.values.size()));
}

RotationRecord parse_json_record(const std::string& text, Repr fallback, bool deg) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseFailure(std::string("bad JSON record: ") + e.what());
  }
  if (!j.is_object()) throw ParseFailure("JSON record must be an object");

  RotationRecord rec;
  rec.repr = fallback;
  bool rec_deg = deg;
  try {
    if (j.contains("repr")) rec.repr = repr_from_token(j.at("repr").get<std::string>());
    if (j.contains("units")) {
      const std::string u = j.at("units").get<std::string>();
      if (u == "deg")
        rec_deg = true;
      else if (u == "rad")
        rec_deg = false;
      else
        throw ParseFailure("units must be 'rad' or 'deg', got '" + u + "'");
    }
    if (!j.contains("values")) throw ParseFailure("JSON record lacks 'values'");
    rec.values = j.at("values").get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseFailure(std::string("bad JSON record: ") + e.what());
  }
  check_arity(rec);
  if (rec_deg) scale_in_place(rec, +1.0);
  return rec;
}

}  // namespace

RotationRecord parse_record(const std::string& text, Repr fallback, bool deg) {
  std::size_t begin = 0;
  while (begin < text.size() && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  if (begin == text.size()) throw ParseFailure("empty record");
  if (text[begin] == '{') return parse_json_record(text.substr(begin), fallback, deg);

  std::string list = text;
  for (char& c : list)
    if (c == ',') c = ' ';

  RotationRecord rec;
  rec.repr = fallback;
  std::istringstream in(list);
  double x;
  while (in >> x) rec.values.push_back(x);
  if (!in.eof()) {
    std::string rest;
    in.clear();
    in >> rest;
    throw ParseFailure("unparseable value '" + rest + "'");
  }
  check_arity(rec);
  if (deg) scale_in_place(rec, +1.0);
  return rec;
}

std::string format_scalar(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_record(const RotationRecord& rec, bool deg, bool json) {
  RotationRecord out = rec;
  if (deg) scale_in_place(out, -1.0);
  for (double& v : out.values)
    if (v == 0.0) v = 0.0;  // print negative zero as plain 0
  if (json) {
    nlohmann::json j;
    j["repr"] = repr_token(out.repr);
    j["units"] = deg ? "deg" : "rad";
    j["values"] = out.values;
    return j.dump();
  }
  std::string line;
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    if (i) line += ' ';
    line += format_scalar(out.values[i]);
  }
  return line;
}

rotfuse::Quat record_to_quat(const RotationRecord& rec) {
  const std::vector<double>& v = rec.values;
  switch (rec.repr) {
    case Repr::quat: {
      rotfuse::Quat q{v[0], v[1], v[2], v[3]};
      rotfuse::require_unit(q);
      return q;
    }
    case Repr::rotmat: {
      rotfuse::RotMat r;
      for (int i = 0; i < 9; ++i) r(i / 3, i % 3) = v[i];
      return rotfuse::rotmat_to_quat(r);
    }
    case Repr::tilt: return rotfuse::tilt_to_quat({v[0], v[1], v[2]});
    case Repr::fused: {
      if (v[3] != 1.0 && v[3] != -1.0)
        throw DomainError("fused hemisphere must be 1 or -1");
      return rotfuse::fused_to_quat({v[0], v[1], v[2], static_cast<int>(v[3])});
    }
    case Repr::euler: return rotfuse::euler_zyx_to_quat({v[0], v[1], v[2]});
    case Repr::axisangle: return rotfuse::axisangle_to_quat({{v[0], v[1], v[2]}, v[3]});
  }
  throw ParseFailure("unknown representation");
}

RotationRecord quat_to_record(const rotfuse::Quat& q, Repr repr) {
  RotationRecord rec;
  rec.repr = repr;
  switch (repr) {
    case Repr::quat:
      rec.values = {q.w, q.x, q.y, q.z};
      break;
    case Repr::rotmat: {
      const rotfuse::RotMat r = rotfuse::quat_to_rotmat(q);
      for (int i = 0; i < 9; ++i) rec.values.push_back(r(i / 3, i % 3));
      break;
    }
    case Repr::tilt: {
      const rotfuse::TiltAngles t = rotfuse::quat_to_tilt(q);
      rec.values = {t.psi, t.gamma, t.alpha};
      break;
    }
    case Repr::fused: {
      // Emit the standard form so hemisphere-boundary rotations print a
      // stable tuple; the snap moves the rotation by at most the tolerance.
      const rotfuse::FusedAngles f =
          rotfuse::standard_form(rotfuse::quat_to_fused(q), 1e-12);
      rec.values = {f.psi, f.theta, f.phi, static_cast<double>(f.hemi)};
      break;
    }
    case Repr::euler: {
      const rotfuse::EulerZYX e = rotfuse::quat_to_euler_zyx(q);
      rec.values = {e.yaw, e.pitch, e.roll};
      break;
    }
    case Repr::axisangle: {
      const rotfuse::AxisAngle aa = rotfuse::quat_to_axisangle(q);
      rec.values = {aa.axis.x, aa.axis.y, aa.axis.z, aa.angle};
      break;
    }
  }
  return rec;
}

}  // namespace rotcli
