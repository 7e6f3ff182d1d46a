#include "skein/json_io.hpp"

#include <cctype>

#include "skein/error.hpp"

namespace skein {

using nlohmann::json;

Scalar parse_scalar_polynomial(std::string_view text) {
  std::size_t pos = 0;
  auto ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto digits = [&] {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return std::string(text.substr(start, pos - start));
  };
  Scalar total;
  bool first = true;
  ws();
  if (pos == text.size()) throw ParseError(pos, "empty polynomial");
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '-' || text[pos] == '+') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      ws();
    } else if (!first) {
      throw ParseError(pos, "expected '+' or '-'");
    }
    first = false;
    mpq_class coeff = 1;
    int dq = 0, dz = 0, dw = 0;
    bool any = false;
    while (true) {
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        std::string n = digits();
        if (pos < text.size() && text[pos] == '/') {
          ++pos;
          std::string d = digits();
          if (d.empty()) throw ParseError(pos, "expected denominator");
          n += "/" + d;
        }
        mpq_class c(n);
        c.canonicalize();
        coeff *= c;
      } else if (pos < text.size() && (text[pos] == 'q' || text[pos] == 'z' || text[pos] == 'w')) {
        char v = text[pos++];
        int e = 1;
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          std::string d = digits();
          if (d.empty()) throw ParseError(pos, "expected exponent");
          e = std::stoi(d);
        }
        (v == 'q' ? dq : v == 'z' ? dz : dw) += e;
      } else {
        throw ParseError(pos, "expected a coefficient or one of q, z, w");
      }
      any = true;
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!any) throw ParseError(pos, "empty term");
    total += Scalar(Poly::monomial(sign * coeff, dq, dz)) * sqrt_lambda_pow(dw);
    ws();
  }
  return total;
}

json to_json(const Scalar& x) {
  Scalar::Fraction f = x.fraction();
  return json{{"num", f.num}, {"den", f.den}, {"has_w", x.has_w()}};
}

Scalar scalar_from_json(const json& j) {
  Scalar num = parse_scalar_polynomial(j.at("num").get<std::string>());
  Scalar den = parse_scalar_polynomial(j.at("den").get<std::string>());
  return num / den;
}

json to_json(const SMonomial& m) {
  json a = json::array();
  for (auto [k, mult] : m.factors()) a.push_back(json::array({k, mult}));
  return a;
}

SMonomial smonomial_from_json(const json& j) {
  std::vector<int> idx;
  for (auto& f : j) {
    int k = f.at(0).get<int>(), mult = f.at(1).get<int>();
    if (k == 0 || mult < 1) throw InputError("malformed monomial factor");
    idx.insert(idx.end(), mult, k);
  }
  return SMonomial::from_indices(idx);
}

json to_json(const TraceValue& v) {
  json a = json::array();
  for (auto& [m, c] : v.terms()) a.push_back(json{{"monomial", to_json(m)}, {"coeff", to_json(c)}});
  return a;
}

TraceValue trace_value_from_json(const json& j) {
  TraceValue v;
  for (auto& t : j) v.add(smonomial_from_json(t.at("monomial")), scalar_from_json(t.at("coeff")));
  return v;
}

json to_json(const AlgebraElement& x) {
  json terms = json::array();
  for (auto& [w, c] : x.sorted_terms()) {
    json loops = json::array();
    for (auto [i, k] : w.loops()) loops.push_back(json::array({i, k}));
    terms.push_back(json{{"loops", loops},
                         {"tail", w.tail().letters()},
                         {"word", w.str()},
                         {"coeff", to_json(x.loop_coefficient(w))}});
  }
  return json{{"strands", x.strands()}, {"terms", terms}};
}

json to_json(const LevelSystem& sys) {
  json eqs = json::array();
  for (auto& eq : sys.equations) {
    eqs.push_back(json{{"tau", eq.tau ? json(eq.tau->exponents) : json::array()},
                       {"tau_word", eq.tau ? eq.tau->str() : std::string("1")},
                       {"sign", eq.sign},
                       {"degenerate", eq.degenerate()},
                       {"lhs", to_json(eq.lhs)}});
  }
  json unknowns = json::array();
  for (auto& u : sys.unknowns) unknowns.push_back(to_json(u));
  return json{{"level", sys.level},
              {"max_strands", sys.max_index},
              {"max_exp", sys.max_exp},
              {"unknowns", unknowns},
              {"equations", eqs}};
}

json to_json(const SolvedSystem& sol) {
  json pivots = json::array(), rels = json::array(), und = json::array(), tors = json::array(),
       cols = json::array();
  for (auto& c : sol.columns) cols.push_back(to_json(c));
  for (auto& p : sol.pivots) pivots.push_back(json{{"monomial", to_json(p.column)}, {"equation", p.equation}});
  for (auto& r : sol.relations) rels.push_back(json{{"monomial", to_json(r.unknown)}, {"coeff", to_json(r.coefficient)}});
  for (auto& u : sol.undetermined) und.push_back(to_json(u));
  for (auto& b : sol.torsion) tors.push_back(to_json(b));
  return json{{"level", sol.level},
              {"minimal", to_json(sol.minimal)},
              {"columns", cols},
              {"rank", sol.rank},
              {"pivots", pivots},
              {"relations", rels},
              {"undetermined", und},
              {"torsion_witnesses", tors}};
}

}  // namespace skein
