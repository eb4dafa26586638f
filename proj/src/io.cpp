#include "kschur/io.hpp"

#include <cctype>
#include <sstream>

#include "json_int.hpp"
#include "kschur/errors.hpp"

namespace kschur {

using nlohmann::json;
using detail::int_from_json;
using detail::int_to_json;

namespace {

bool has_k(Basis b) { return b == Basis::kschur || b == Basis::dual_kschur; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s) {
  s = trim(s);
  std::string t(s);
  if (t.empty()) throw ParseError("missing coefficient");
  for (std::size_t i = 0; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i])) && !(i == 0 && t[i] == '-'))
      throw ParseError("malformed coefficient '" + t + "'");
  if (t == "-") throw ParseError("malformed coefficient '-'");
  return Integer(t);
}

Partition partition_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected a partition array, got " + j.dump());
  std::vector<int> parts;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError("partition parts must be integers");
    parts.push_back(x.get<int>());
  }
  try {
    return Partition(parts);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

template <class F>
auto wrap_json(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON document: ") + e.what());
  }
}

}  // namespace

std::string format_sympoly(const SymPoly& f) {
  std::ostringstream os;
  os << basis_name(f.basis());
  if (has_k(f.basis())) os << '(' << f.k() << ')';
  os << ": {";
  bool first = true;
  for (const auto& [p, c] : f.terms()) {
    os << (first ? " " : ", ") << to_string(p) << ": " << c;
    first = false;
  }
  os << (first ? "}" : " }");
  return os.str();
}

SymPoly parse_sympoly(std::string_view text, int empty_degree) {
  text = trim(text);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("expected 'basis: { ... }'");
  std::string_view head = trim(text.substr(0, colon));
  int k = 0;
  if (const auto open = head.find('('); open != std::string_view::npos) {
    if (head.back() != ')') throw ParseError("malformed basis tag '" + std::string(head) + "'");
    const std::string kstr(head.substr(open + 1, head.size() - open - 2));
    if (kstr.empty() || kstr.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("malformed bound in basis tag '" + std::string(head) + "'");
    k = std::stoi(kstr);
    head = head.substr(0, open);
  }
  const Basis basis = parse_basis(head);
  if (has_k(basis) && k == 0) throw ParseError("k-basis tag needs a bound, e.g. kschur(3)");
  std::string_view body = trim(text.substr(colon + 1));
  if (body.size() < 2 || body.front() != '{' || body.back() != '}')
    throw ParseError("expected braces around the terms");
  body = trim(body.substr(1, body.size() - 2));

  std::vector<std::pair<Partition, Integer>> terms;
  while (!body.empty()) {
    const auto close = body.find(']');
    if (close == std::string_view::npos) throw ParseError("unterminated partition");
    const Partition p = parse_partition(body.substr(0, close + 1));
    body = trim(body.substr(close + 1));
    if (body.empty() || body.front() != ':') throw ParseError("expected ':' after partition");
    body.remove_prefix(1);
    const auto comma = body.find(',');
    terms.emplace_back(p, parse_integer(body.substr(0, comma)));
    body = comma == std::string_view::npos ? std::string_view{} : trim(body.substr(comma + 1));
  }
  const int degree = terms.empty() ? empty_degree : terms.front().first.degree();
  try {
    SymPoly out(basis, degree, k);
    for (const auto& [p, c] : terms) out.add(p, c);
    return out;
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

json sympoly_to_json(const SymPoly& f) {
  json terms = json::array();
  for (const auto& [p, c] : f.terms())
    terms.push_back({{"index", p.parts()}, {"coeff", int_to_json(c)}});
  json j = {{"basis", basis_name(f.basis())}, {"degree", f.degree()}, {"terms", terms}};
  if (has_k(f.basis())) j["k"] = f.k();
  return j;
}

SymPoly sympoly_from_json(const json& j) {
  return wrap_json([&] {
    const Basis basis = parse_basis(j.at("basis").get<std::string>());
    const int k = has_k(basis) ? j.at("k").get<int>() : 0;
    try {
      SymPoly out(basis, j.at("degree").get<int>(), k);
      for (const auto& t : j.at("terms"))
        out.add(partition_from_json(t.at("index")), int_from_json(t.at("coeff")));
      return out;
    } catch (const PreconditionError& e) {
      throw ParseError(e.what());
    }
  });
}

json gw_to_json(const GWExpansion& g) {
  json terms = json::array();
  for (const auto& [key, c] : g.terms)
    terms.push_back({{"nu", key.second.parts()}, {"d", key.first}, {"coeff", int_to_json(c)}});
  return {{"l", g.l},
          {"n", g.n},
          {"lambda", g.lambda.parts()},
          {"mu", g.mu.parts()},
          {"terms", terms}};
}

GWExpansion gw_from_json(const json& j) {
  return wrap_json([&] {
    GWExpansion g;
    g.l = j.at("l").get<int>();
    g.n = j.at("n").get<int>();
    g.lambda = partition_from_json(j.at("lambda"));
    g.mu = partition_from_json(j.at("mu"));
    for (const auto& t : j.at("terms"))
      g.terms[{t.at("d").get<int>(), partition_from_json(t.at("nu"))}] =
          int_from_json(t.at("coeff"));
    return g;
  });
}

json fusion_to_json(const FusionTerms& f) {
  json terms = json::array();
  for (const auto& [nu, c] : f) terms.push_back({{"nu", nu.parts()}, {"coeff", int_to_json(c)}});
  return terms;
}

FusionTerms fusion_from_json(const json& j) {
  return wrap_json([&] {
    FusionTerms f;
    for (const auto& t : j) f[partition_from_json(t.at("nu"))] = int_from_json(t.at("coeff"));
    return f;
  });
}

json tableaux_to_json(const std::vector<KTableau>& ts) {
  json out = json::array();
  for (const auto& t : ts)
    out.push_back({{"k", t.k},
                   {"outer", t.outer.parts()},
                   {"inner", t.inner.parts()},
                   {"weight", t.weight},
                   {"rows", t.rows}});
  return out;
}

std::vector<KTableau> tableaux_from_json(const json& j) {
  return wrap_json([&] {
    std::vector<KTableau> out;
    for (const auto& x : j) {
      KTableau t;
      t.k = x.at("k").get<int>();
      t.outer = partition_from_json(x.at("outer"));
      t.inner = partition_from_json(x.at("inner"));
      t.weight = x.at("weight").get<std::vector<int>>();
      t.rows = x.at("rows").get<std::vector<std::vector<int>>>();
      out.push_back(std::move(t));
    }
    return out;
  });
}

json tensor_to_json(const Tensor& t) {
  json out = json::array();
  for (const auto& [key, c] : t)
    out.push_back(
        {{"left", key.first.parts()}, {"right", key.second.parts()}, {"coeff", int_to_json(c)}});
  return out;
}

}  // namespace kschur
