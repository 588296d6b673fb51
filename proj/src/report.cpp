#include "spider/report.hpp"

#include <json.hpp>

#include <sstream>

namespace spider {

namespace {

using Json = nlohmann::ordered_json;

// [[exponent, coefficient], ...]; coefficients beyond 64 bits become strings.
Json poly_json(const LaurentPoly &p) {
  Json a = Json::array();
  for (const auto &t : p.terms()) {
    if (t.coefficient >= std::numeric_limits<std::int64_t>::min() &&
        t.coefficient <= std::numeric_limits<std::int64_t>::max())
      a.push_back({t.exponent, static_cast<std::int64_t>(t.coefficient)});
    else
      a.push_back({t.exponent, t.coefficient.str()});
  }
  return a;
}

Json report_json(const ScanReport &r) {
  Json j;
  j["signs"] = to_string(r.signs);
  j["dimension"] = r.dimension;
  Json fs = Json::array();
  for (const auto &f : r.failures) {
    Json x;
    x["state"] = to_string(f.state);
    x["offending_state"] = to_string(f.offending_state);
    x["coefficient"] = poly_json(f.coefficient);
    fs.push_back(std::move(x));
  }
  j["failures"] = std::move(fs);
  return j;
}

Json tensor_json(const TensorVector &x) {
  Json j;
  j["signs"] = to_string(x.signs());
  Json es = Json::array();
  for (const auto &[s, p] : x.entries()) {
    Json e;
    e["state"] = to_string(s);
    e["coefficient"] = poly_json(p);
    es.push_back(std::move(e));
  }
  j["entries"] = std::move(es);
  return j;
}

} // namespace

std::string to_text(const ScanReport &r) {
  std::ostringstream os;
  os << "signs " << to_string(r.signs) << "\n";
  os << "dimension " << r.dimension << "\n";
  os << "failures " << r.failures.size() << "\n";
  for (const auto &f : r.failures)
    os << "failure " << to_string(f.state) << " " << to_string(f.offending_state) << " " << to_text(f.coefficient)
       << "\n";
  os << "end\n";
  return os.str();
}

std::string to_json(const ScanReport &r) { return report_json(r).dump(2) + "\n"; }

std::string to_json(const std::vector<ScanReport> &rs) {
  Json a = Json::array();
  for (const auto &r : rs)
    a.push_back(report_json(r));
  return a.dump(2) + "\n";
}

std::string to_json(const Web &w) {
  Json j;
  j["top"] = to_string(w.top());
  j["bottom"] = to_string(w.bottom());
  j["encoding"] = w.encoding();
  j["web"] = to_text(w.drawing());
  return j.dump(2) + "\n";
}

std::string to_json(const TensorVector &x) { return tensor_json(x).dump(2) + "\n"; }

std::string to_json(const WebCombination &c) {
  Json j;
  j["top"] = to_string(c.top());
  j["bottom"] = to_string(c.bottom());
  Json ts = Json::array();
  for (const auto &[key, t] : c.terms()) {
    Json x;
    x["coefficient"] = poly_json(t.coefficient);
    x["encoding"] = key;
    x["web"] = to_text(t.web.drawing());
    ts.push_back(std::move(x));
  }
  j["terms"] = std::move(ts);
  return j.dump(2) + "\n";
}

std::string basis_to_text(const SignString &s, const DualBasis &b) {
  std::ostringstream os;
  os << "signs " << to_string(s) << "\n";
  os << "dimension " << b.size() << "\n";
  for (auto it = b.rbegin(); it != b.rend(); ++it) {
    os << "element " << to_string(it->first) << "\n";
    os << to_text(it->second);
  }
  os << "end\n";
  return os.str();
}

std::string basis_to_json(const SignString &s, const DualBasis &b) {
  Json j;
  j["signs"] = to_string(s);
  j["dimension"] = b.size();
  Json es = Json::array();
  for (auto it = b.rbegin(); it != b.rend(); ++it) {
    Json e;
    e["state"] = to_string(it->first);
    e["expansion"] = tensor_json(it->second)["entries"];
    es.push_back(std::move(e));
  }
  j["elements"] = std::move(es);
  return j.dump(2) + "\n";
}

} // namespace spider
