#include "lrn/cli.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lrn::cli {
namespace {

using ojson = nlohmann::ordered_json;

ojson int_json(const Int& v) {
  if (fits_int64(v)) return v.get_si();
  return v.get_str();
}

Int json_int(const ojson& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  const ojson& v = j.at(key);
  if (v.is_number_integer()) return Int(static_cast<long>(v.get<std::int64_t>()));
  if (v.is_string()) return parse_int(v.get<std::string>());
  throw std::invalid_argument(std::string("field '") + key + "' is not an integer");
}

}  // namespace

std::string solution_jsonl(const Solution& s) {
  ojson j;
  j["c1"] = int_json(s.c1);
  j["c2"] = int_json(s.c2);
  j["x"] = int_json(s.x);
  j["y"] = int_json(s.y);
  j["n"] = s.n;
  j["case"] = to_string(s.kind);
  j["complete"] = s.complete;
  return j.dump();
}

std::string skip_jsonl(const Int& c1, const Int& c2, const std::string& reason) {
  ojson j;
  j["c1"] = int_json(c1);
  j["c2"] = int_json(c2);
  j["skip_reason"] = reason;
  return j.dump();
}

Solution solution_from_jsonl(const std::string& line) {
  ojson j;
  try {
    j = ojson::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("record is not an object");
  for (const auto& [key, value] : j.items()) {
    static const std::vector<std::string> known{"c1", "c2", "x", "y", "n", "case", "complete"};
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw std::invalid_argument("unexpected field '" + key + "'");
    }
  }
  Solution s;
  s.c1 = json_int(j, "c1");
  s.c2 = json_int(j, "c2");
  s.x = json_int(j, "x");
  s.y = json_int(j, "y");
  const Int n = json_int(j, "n");
  if (n < 3 || !n.fits_uint_p()) throw std::invalid_argument("field 'n' out of range");
  s.n = static_cast<unsigned>(n.get_ui());
  if (!j.contains("case") || !j["case"].is_string()) throw std::invalid_argument("missing field 'case'");
  const auto kind = parse_solution_case(j["case"].get<std::string>());
  if (!kind) throw std::invalid_argument("unknown case tag");
  s.kind = *kind;
  if (!j.contains("complete") || !j["complete"].is_boolean()) throw std::invalid_argument("missing field 'complete'");
  s.complete = j["complete"].get<bool>();
  return s;
}

std::string solution_csv(const Solution& s) {
  return s.c1.get_str() + "," + s.c2.get_str() + "," + s.x.get_str() + "," + s.y.get_str() + "," +
         std::to_string(s.n);
}

std::string solution_pretty(const Solution& s) {
  std::ostringstream os;
  os << s.c1 << "*" << s.x << "^2 + " << s.c2 << " = " << s.y << "^" << s.n << "  [" << to_string(s.kind)
     << (s.complete ? ", complete" : ", bounded") << "]";
  if (!s.note.empty()) os << "  (" << s.note << ")";
  return os.str();
}

std::string report_jsonl(const EquationInstance& inst, const ExponentReport& report) {
  ojson j;
  j["c1"] = int_json(inst.c1);
  j["c2"] = int_json(inst.c2);
  j["c"] = int_json(inst.c);
  j["d"] = int_json(inst.d);
  j["class_number"] = report.class_number;
  ojson special = ojson::array();
  for (const auto& hit : report.special7) special.push_back({{"y", int_json(hit.y)}, {"x", int_json(hit.x)}});
  j["special7"] = special;
  j["class_primes"] = report.class_primes;
  ojson bq = ojson::array();
  for (const auto& e : report.bq_primes) bq.push_back({{"q", int_json(e.q)}, {"b_q", int_json(e.b_q)}, {"p", e.p}});
  j["bq_primes"] = bq;
  j["primes"] = report.primes;
  return j.dump();
}

std::string report_pretty(const EquationInstance& inst, const ExponentReport& report) {
  std::ostringstream os;
  os << "C1 = " << inst.c1 << ", C2 = " << inst.c2 << ": C1*C2 = " << inst.c << " * " << inst.d << "^2\n";
  os << "  class number h(-" << inst.c << ") = " << report.class_number << "\n";
  os << "  base primes: 3 5\n";
  if (!report.special7.empty()) {
    os << "  p = 7 hits:";
    for (const auto& hit : report.special7) os << " (x=" << hit.x << ", y=" << hit.y << ")";
    os << "\n";
  }
  if (!report.class_primes.empty()) {
    os << "  from h:";
    for (auto p : report.class_primes) os << " " << p;
    os << "\n";
  }
  for (const auto& e : report.bq_primes) os << "  q = " << e.q << ", B_q = " << e.b_q << ": p = " << e.p << "\n";
  os << "  candidate primes:";
  for (auto p : report.primes) os << " " << p;
  return os.str();
}

}  // namespace lrn::cli
