#include "abext/io.hpp"

#include <cctype>
#include <limits>

namespace abext {

namespace {

class ExpressionParser {
public:
  explicit ExpressionParser(std::string_view text) : s_(text) {}

  FgGroup parse() {
    skip_space();
    if (pos_ == s_.size())
      throw ParseError("empty group expression", pos_);
    if (s_[pos_] == '0') {
      ++pos_;
      skip_space();
      if (pos_ != s_.size())
        throw ParseError("unexpected text after '0'", pos_);
      return FgGroup::trivial();
    }
    for (;;) {
      term();
      skip_space();
      if (pos_ == s_.size())
        break;
      if (s_[pos_] != '+')
        throw ParseError("expected '+'", pos_);
      ++pos_;
      skip_space();
    }
    const Index k = static_cast<Index>(orders_.size());
    IntMatrix rel = IntMatrix::Zero(k + free_rank_, k);
    for (Index i = 0; i < k; ++i)
      rel(i, i) = orders_[static_cast<std::size_t>(i)];
    return present(k + free_rank_, rel).group;
  }

private:
  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  Integer number() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (start == pos_)
      throw ParseError("expected a number", start);
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  void term() {
    if (pos_ == s_.size() || s_[pos_] != 'Z')
      throw ParseError("expected 'Z'", pos_);
    ++pos_;
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      const std::size_t at = pos_;
      Integer r = number();
      if (r > 1000000)
        throw InvalidInput("free rank " + r.str() + " at position " +
                           std::to_string(at) + " is too large");
      free_rank_ += r.convert_to<long long>();
    } else if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      const std::size_t at = pos_;
      Integer n = number();
      if (n <= 1)
        throw InvalidInput("Z/" + n.str() + " at position " + std::to_string(at) +
                           ": cyclic order must be at least 2");
      orders_.push_back(std::move(n));
    } else {
      free_rank_ += 1;
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  Index free_rank_ = 0;
  std::vector<Integer> orders_;
};

const Json &field(const Json &j, const char *key) {
  if (!j.is_object())
    throw InvalidInput(std::string("expected a JSON object with field '") + key + "'");
  auto it = j.find(key);
  if (it == j.end())
    throw InvalidInput(std::string("missing field '") + key + "'");
  return *it;
}

Index index_from_json(const Json &j, const char *what) {
  Integer n = integer_from_json(j);
  if (n < 0 || n > std::numeric_limits<int>::max())
    throw InvalidInput(std::string(what) + " out of range: " + n.str());
  return n.convert_to<Index>();
}

IntMatrix rows_from_json(const Json &entries, Index rows, Index cols) {
  if (!entries.is_array() || static_cast<Index>(entries.size()) != rows)
    throw InvalidInput("matrix: expected " + std::to_string(rows) + " rows");
  IntMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const Json &row = entries[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols)
      throw InvalidInput("matrix: row " + std::to_string(i) + " should have " +
                         std::to_string(cols) + " entries");
    for (Index c = 0; c < cols; ++c)
      m(i, c) = integer_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

} // namespace

FgGroup parse_group_expression(std::string_view text) {
  return ExpressionParser(text).parse();
}

Json integer_to_json(const Integer &n) {
  if (n >= std::numeric_limits<long long>::min() &&
      n <= std::numeric_limits<long long>::max())
    return n.convert_to<long long>();
  return n.str();
}

Integer integer_from_json(const Json &j) {
  if (j.is_number_integer())
    return j.is_number_unsigned() ? Integer(j.get<unsigned long long>())
                                  : Integer(j.get<long long>());
  if (j.is_string()) {
    const auto &s = j.get_ref<const std::string &>();
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i == s.size())
      throw InvalidInput("not an integer: \"" + s + "\"");
    for (std::size_t k = i; k < s.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(s[k])))
        throw InvalidInput("not an integer: \"" + s + "\"");
    return Integer(s);
  }
  throw InvalidInput("expected an integer, got " + j.dump());
}

Json to_json(const IntMatrix &m) {
  Json entries = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c)
      row.push_back(integer_to_json(m(i, c)));
    entries.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

IntMatrix matrix_from_json(const Json &j) {
  Index rows = index_from_json(field(j, "rows"), "rows");
  Index cols = index_from_json(field(j, "cols"), "cols");
  return rows_from_json(field(j, "entries"), rows, cols);
}

Json to_json(const FgGroup &g) {
  Json factors = Json::array();
  for (const auto &d : g.invariant_factors())
    factors.push_back(integer_to_json(d));
  return {{"free_rank", g.free_rank()}, {"invariant_factors", std::move(factors)}};
}

FgGroup group_from_json(const Json &j) {
  if (j.is_string())
    return parse_group_expression(j.get_ref<const std::string &>());
  Index r = index_from_json(field(j, "free_rank"), "free_rank");
  const Json &fs = field(j, "invariant_factors");
  if (!fs.is_array())
    throw InvalidInput("invariant_factors must be an array");
  std::vector<Integer> factors;
  for (const auto &f : fs)
    factors.push_back(integer_from_json(f));
  return FgGroup(r, std::move(factors));
}

Json to_json(const Morphism &f) {
  return {{"domain", to_json(f.domain())},
          {"codomain", to_json(f.codomain())},
          {"matrix", to_json(f.matrix())}};
}

Morphism morphism_from_json(const Json &j) {
  FgGroup dom = group_from_json(field(j, "domain"));
  FgGroup cod = group_from_json(field(j, "codomain"));
  const Json &mj = field(j, "matrix");
  IntMatrix m = mj.is_array()
                    ? rows_from_json(mj, cod.generator_count(), dom.generator_count())
                    : matrix_from_json(mj);
  if (m.rows() != cod.generator_count() || m.cols() != dom.generator_count())
    throw InvalidInput("morphism matrix must be " +
                       std::to_string(cod.generator_count()) + " x " +
                       std::to_string(dom.generator_count()));
  return Morphism(std::move(dom), std::move(cod), std::move(m));
}

Json to_json(const Extension &e) {
  return {{"A", to_json(e.A())},
          {"B", to_json(e.B())},
          {"C", to_json(e.C())},
          {"phi", to_json(e.phi())},
          {"psi", to_json(e.psi())}};
}

Extension extension_from_json(const Json &j) {
  Morphism phi = morphism_from_json(field(j, "phi"));
  Morphism psi = morphism_from_json(field(j, "psi"));
  auto check = [&](const char *key, const FgGroup &actual) {
    if (j.contains(key) && !(group_from_json(j.at(key)) == actual))
      throw InvalidInput(std::string("extension: stated ") + key + " differs from " +
                         to_string(actual) + " implied by the maps");
  };
  check("A", phi.domain());
  check("B", phi.codomain());
  check("C", psi.codomain());
  return Extension(std::move(phi), std::move(psi));
}

namespace {

Json components_json(const ExtGroup &g, const std::vector<Index> &which) {
  Json out = Json::array();
  for (Index k : which) {
    const auto &c = g.components()[static_cast<std::size_t>(k)];
    out.push_back({{"c_index", c.c_index},
                   {"a_target", c.target_label()},
                   {"order", integer_to_json(c.order)}});
  }
  return out;
}

} // namespace

Json to_json(const ExtGroup &g) {
  std::vector<Index> all(static_cast<std::size_t>(g.size()));
  for (Index k = 0; k < g.size(); ++k)
    all[static_cast<std::size_t>(k)] = k;
  return {{"structure", to_json(g.structure())},
          {"components", components_json(g, all)}};
}

Json to_json(const ExtTSubgroup &g) {
  return {{"structure", to_json(g.structure())},
          {"components", components_json(g.parent(), g.members())}};
}

Json to_json(const ExtElement &x) {
  Json coords = Json::array();
  for (Index k = 0; k < x.coords().size(); ++k)
    coords.push_back(integer_to_json(x.coords()(k)));
  return {{"C", to_json(x.parent().C())},
          {"A", to_json(x.parent().A())},
          {"coords", std::move(coords)}};
}

ExtElement ext_element_from_json(const Json &j) {
  ExtGroup g = ext_group(group_from_json(field(j, "C")), group_from_json(field(j, "A")));
  const Json &cs = field(j, "coords");
  if (!cs.is_array() || static_cast<Index>(cs.size()) != g.size())
    throw InvalidInput("ext element: expected " + std::to_string(g.size()) +
                       " coordinates");
  IntVector v(g.size());
  for (Index k = 0; k < g.size(); ++k)
    v(k) = integer_from_json(cs[static_cast<std::size_t>(k)]);
  return ExtElement(std::move(g), std::move(v));
}

} // namespace abext
