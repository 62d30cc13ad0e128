#include "gcdtn/io.hpp"

#include <cctype>
#include <sstream>

namespace gcdtn {

namespace {

auto string_array(const std::vector<std::string> &v) -> Json {
  Json out = Json::array();
  for (const auto &s : v) out.push_back(s);
  return out;
}

auto one_based(std::span<const std::size_t> idx) -> Json {
  Json out = Json::array();
  for (std::size_t i : idx) out.push_back(i + 1);
  return out;
}

auto nat_from_json(const Json &v, const std::string &where) -> Nat {
  try {
    if (v.is_string()) return Nat::parse(v.get<std::string>());
    if (v.is_number_unsigned()) return Nat(v.get<std::uint64_t>());
  } catch (const Error &e) {
    throw Error(Errc::ParseError, where + ": " + e.what());
  }
  throw Error(Errc::ParseError, where + ": expected a decimal string");
}

auto field(const Json &doc, const char *key) -> const Json & {
  auto it = doc.find(key);
  if (it == doc.end()) throw Error(Errc::ParseError, std::string("missing field \"") + key + "\"");
  return *it;
}

} // namespace

auto parse_ordered_set_text(std::string_view text) -> OrderedSet {
  std::vector<Nat> elements;
  std::size_t line_no = 1;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (c == '\n') {
      ++line_no;
      ++pos;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    const std::string_view token = text.substr(pos, end - pos);
    try {
      elements.push_back(Nat::parse(token));
    } catch (const Error &) {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) +
                                        ": expected a positive decimal integer, got '" +
                                        std::string(token) + "'");
    }
    pos = end;
  }
  if (elements.empty()) throw Error(Errc::ParseError, "input contains no integers");
  try {
    return OrderedSet(std::move(elements));
  } catch (const Error &e) {
    throw Error(Errc::ParseError, e.what());
  }
}

auto ordered_set_from_json(const Json &doc) -> OrderedSet {
  const Json &elems = field(doc, "elements");
  if (!elems.is_array()) throw Error(Errc::ParseError, "field \"elements\" must be an array");
  std::vector<Nat> out;
  for (std::size_t i = 0; i < elems.size(); ++i)
    out.push_back(nat_from_json(elems[i], "elements[" + std::to_string(i) + "]"));
  try {
    return OrderedSet(std::move(out));
  } catch (const Error &e) {
    throw Error(Errc::ParseError, std::string("elements: ") + e.what());
  }
}

auto exponent_matrix_from_json(const Json &doc) -> ExponentMatrix {
  const Json &primes = field(doc, "primes");
  const Json &rows = field(doc, "exponents");
  if (!primes.is_array() || !rows.is_array())
    throw Error(Errc::ParseError, "fields \"primes\" and \"exponents\" must be arrays");
  ExponentMatrix m;
  for (std::size_t i = 0; i < primes.size(); ++i)
    m.primes.push_back(nat_from_json(primes[i], "primes[" + std::to_string(i) + "]"));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].is_array() || rows[r].size() != m.primes.size())
      throw Error(Errc::ParseError, "exponents[" + std::to_string(r) + "]: expected " +
                                        std::to_string(m.primes.size()) + " entries");
    std::vector<unsigned long> row;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      const std::string where = "exponents[" + std::to_string(r) + "][" + std::to_string(c) + "]";
      Nat v = nat_from_json(rows[r][c], where);
      if (!v.fits_u64()) throw Error(Errc::ParseError, where + ": exponent too large");
      row.push_back(static_cast<unsigned long>(v.to_u64()));
    }
    m.exponents.push_back(std::move(row));
  }
  return m;
}

auto matrix_from_json(const Json &doc) -> ExactMatrix {
  const Json &entries = field(doc, "entries");
  std::vector<std::vector<Rat>> grid;
  for (const auto &row : entries) {
    std::vector<Rat> r;
    for (const auto &v : row) r.push_back(Rat::parse(v.get<std::string>()));
    grid.push_back(std::move(r));
  }
  return ExactMatrix(grid);
}

auto parse_input(std::string_view text) -> std::variant<OrderedSet, ExponentMatrix> {
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  if (first == text.size() || text[first] != '{') return parse_ordered_set_text(text);
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error &e) {
    throw Error(Errc::ParseError, std::string("malformed JSON: ") + e.what());
  }
  if (doc.contains("primes")) return exponent_matrix_from_json(doc);
  return ordered_set_from_json(doc);
}

auto to_json(const OrderedSet &s) -> Json {
  Json out = Json::object();
  Json elems = Json::array();
  for (const Nat &x : s.elements()) elems.push_back(x.str());
  out["elements"] = std::move(elems);
  return out;
}

auto to_json(const ExponentMatrix &m) -> Json {
  Json out = Json::object();
  Json primes = Json::array();
  for (const Nat &p : m.primes) primes.push_back(p.str());
  out["primes"] = std::move(primes);
  out["exponents"] = m.exponents;
  return out;
}

auto to_json(const ExactMatrix &m) -> Json {
  Json out = Json::object();
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<std::string> row;
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    entries.push_back(string_array(row));
  }
  out["entries"] = std::move(entries);
  return out;
}

auto to_json(const Permutation &p) -> Json { return one_based(p.image()); }

auto to_json(const TnVerdict &v) -> Json {
  Json out = Json::object();
  out["is_tn"] = v.is_tn();
  out["method"] = method_name(v.method());
  if (const auto *t = std::get_if<TripleWitness>(&v.witness())) {
    out["witness"] = one_based(*t);
  } else if (const auto *m = std::get_if<MinorWitness>(&v.witness())) {
    Json w = Json::object();
    w["rows"] = one_based(m->rows);
    w["cols"] = one_based(m->cols);
    w["value"] = m->value.str();
    out["witness"] = std::move(w);
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

auto to_json(const TridiagonalInverse &t) -> Json {
  Json out = Json::object();
  std::vector<std::string> a, b;
  for (const Rat &q : t.off_diagonal) a.push_back(q.str());
  for (const Rat &q : t.diagonal) b.push_back(q.str());
  out["off_diagonal"] = string_array(a);
  out["diagonal"] = string_array(b);
  return out;
}

auto to_json(const DivisibilityReport &r) -> Json {
  Json out = Json::object();
  out["divides"] = r.divides;
  out["side"] = side_name(r.side);
  out["method"] = division_method_name(r.method);
  out["witness"] = r.witness ? to_json(*r.witness)["entries"] : Json(nullptr);
  if (r.violation) {
    out["violation"] = Json::array({r.violation->row + 1, r.violation->col + 1, r.violation->value.str()});
  } else {
    out["violation"] = nullptr;
  }
  return out;
}

namespace {

auto scalar_text(const Json &v) -> std::string {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

auto is_matrix(const Json &v) -> bool {
  if (!v.is_array() || v.empty()) return false;
  for (const auto &row : v)
    if (!row.is_array()) return false;
  return true;
}

void render_into(std::ostringstream &os, const Json &obj, const std::string &indent) {
  for (const auto &[key, v] : obj.items()) {
    if (v.is_object()) {
      os << indent << key << ":\n";
      render_into(os, v, indent + "  ");
    } else if (is_matrix(v)) {
      os << indent << key << ":\n";
      for (const auto &row : v) {
        os << indent << "  ";
        for (std::size_t c = 0; c < row.size(); ++c) os << (c ? " " : "") << scalar_text(row[c]);
        os << '\n';
      }
    } else if (v.is_array()) {
      os << indent << key << ":";
      for (const auto &e : v) {
        if (e.is_array() || e.is_object())
          os << ' ' << e.dump();
        else
          os << ' ' << scalar_text(e);
      }
      os << '\n';
    } else {
      os << indent << key << ": " << scalar_text(v) << '\n';
    }
  }
}

} // namespace

auto render_text(const Json &report) -> std::string {
  std::ostringstream os;
  render_into(os, report, "");
  return os.str();
}

} // namespace gcdtn
