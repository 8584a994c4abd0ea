// Textual rotation records: a repr token plus a fixed-arity scalar list.
// Values are held in radians; degree scaling happens at the text boundary
// and never touches the hemisphere field or non-angle components.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rotfuse/rotfuse.hpp"

namespace rotcli {

enum class Repr { quat, rotmat, tilt, fused, euler, axisangle };

struct RotationRecord {
  Repr repr = Repr::quat;
  std::vector<double> values;
};

// Malformed input text; distinct from a domain violation in valid-looking data.
class ParseFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Repr repr_from_token(const std::string& token);
const char* repr_token(Repr repr);
std::size_t repr_arity(Repr repr);

// Accepts either a scalar list ("0,0,90,1", commas or whitespace) or a JSON
// object {"repr": ..., "units": "rad"|"deg", "values": [...]}. JSON fields
// override the fallback repr and the deg flag for that record.
RotationRecord parse_record(const std::string& text, Repr fallback, bool deg);

std::string format_record(const RotationRecord& rec, bool deg, bool json);
std::string format_scalar(double x);

// Validates on the way in; throws rotfuse::DomainError on invalid data.
rotfuse::Quat record_to_quat(const RotationRecord& rec);
RotationRecord quat_to_record(const rotfuse::Quat& q, Repr repr);

}  // namespace rotcli
