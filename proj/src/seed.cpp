#include "sclab/seed.hpp"

#include <algorithm>

#include "sclab/common.hpp"
#include "sclab/jsonio.hpp"

namespace sclab {

Value CoeffMonomial::eval(const std::vector<Value>& xs, const RingSpec& ring) const {
  Value out = Value::integer(static_cast<long>(coeff), ring);
  for (const auto& [v, e] : powers) {
    if (v < 0 || v >= static_cast<int>(xs.size()))
      fail(ErrKind::IndexOutOfRange, "coefficient references vertex " + std::to_string(v));
    out = out * xs[static_cast<std::size_t>(v)].pow(static_cast<std::uint64_t>(e));
  }
  return out;
}

CoeffString trivial_string(int d) {
  return CoeffString(static_cast<std::size_t>(d) + 1, CoeffMonomial::unit());
}

void validate_seed(const Seed& s) {
  const int nv = s.quiver.size();
  s.quiver.validate();
  if (static_cast<int>(s.values.size()) != nv)
    fail(ErrKind::ShapeViolation, "seed has " + std::to_string(s.values.size()) +
                                      " values for " + std::to_string(nv) + " vertices");
  if (static_cast<int>(s.strings.size()) != nv)
    fail(ErrKind::ShapeViolation, "seed has " + std::to_string(s.strings.size()) +
                                      " strings for " + std::to_string(nv) + " vertices");
  for (int v = 0; v < nv; ++v) {
    const auto& str = s.strings[static_cast<std::size_t>(v)];
    if (s.quiver.is_frozen(v)) {
      if (!str.empty())
        fail(ErrKind::ShapeViolation, "frozen vertex " + std::to_string(v) + " carries a string");
      continue;
    }
    const int d = s.quiver.multiplicity(v);
    if (static_cast<int>(str.size()) != d + 1)
      fail(ErrKind::ShapeViolation, "string at vertex " + std::to_string(v) + " has " +
                                        std::to_string(str.size()) + " entries, expected " +
                                        std::to_string(d + 1));
    if (!str.front().is_unit() || !str.back().is_unit())
      fail(ErrKind::ShapeViolation,
           "string at vertex " + std::to_string(v) + " must start and end with 1");
    for (const auto& mono : str) {
      if (mono.coeff == 0)
        fail(ErrKind::ShapeViolation, "zero exchange coefficient at vertex " + std::to_string(v));
      for (const auto& [w, e] : mono.powers) {
        if (w < 0 || w >= nv || !s.quiver.is_frozen(w))
          fail(ErrKind::ShapeViolation, "exchange coefficient at vertex " + std::to_string(v) +
                                            " references non-frozen vertex " + std::to_string(w));
        if (e <= 0)
          fail(ErrKind::ShapeViolation,
               "nonpositive exponent in exchange coefficient at vertex " + std::to_string(v));
      }
    }
    if (s.values[static_cast<std::size_t>(v)].is_zero())
      fail(ErrKind::ShapeViolation, "cluster value at mutable vertex " + std::to_string(v) + " is zero");
  }
  for (int v = 0; v < nv; ++v) {
    const Value& x = s.values[static_cast<std::size_t>(v)];
    const bool ok = (s.ring.kind == RingKind::Rational && x.kind() == RingKind::Rational) ||
                    (s.ring.kind == RingKind::PrimeField &&
                     (x.kind() == RingKind::PrimeField || x.is_rational())) ||
                    (s.ring.kind == RingKind::Symbolic &&
                     (x.kind() == RingKind::Symbolic || x.is_rational()));
    if (!ok)
      fail(ErrKind::RingMismatch,
           "value at vertex " + std::to_string(v) + " does not live in the seed ring");
  }
}

TauMonomials tau_monomials(const Seed& s, int k, int r) {
  if (s.quiver.is_frozen(k))
    fail(ErrKind::NotMutable, "tau-monomials requested at frozen vertex " + std::to_string(k));
  const long long d = s.quiver.multiplicity(k);
  if (r < 0 || r > d)
    fail(ErrKind::IndexOutOfRange, "tau exponent " + std::to_string(r) + " outside [0, " +
                                       std::to_string(d) + "]");
  TauMonomials t{Value::one(s.ring), Value::one(s.ring), Value::one(s.ring), Value::one(s.ring)};
  for (int i = 0; i < s.quiver.size(); ++i) {
    if (i == k) continue;
    const long long out_cnt = s.quiver.b(k, i);
    const long long in_cnt = s.quiver.b(i, k);
    if (out_cnt == 0 && in_cnt == 0) continue;
    const Value& xi = s.values[static_cast<std::size_t>(i)];
    if (s.quiver.is_mutable(i)) {
      if (out_cnt > 0) t.u_gt = t.u_gt * xi.pow(static_cast<std::uint64_t>(out_cnt));
      if (in_cnt > 0) t.u_lt = t.u_lt * xi.pow(static_cast<std::uint64_t>(in_cnt));
    } else {
      const long long e_gt = r * out_cnt / d;
      const long long e_lt = r * in_cnt / d;
      if (e_gt > 0) t.v_gt = t.v_gt * xi.pow(static_cast<std::uint64_t>(e_gt));
      if (e_lt > 0) t.v_lt = t.v_lt * xi.pow(static_cast<std::uint64_t>(e_lt));
    }
  }
  return t;
}

Value generalized_exchange(const Seed& s, int k) {
  if (s.quiver.is_frozen(k))
    fail(ErrKind::NotMutable, "cannot exchange at frozen vertex " + std::to_string(k));
  const Value& xk = s.values[static_cast<std::size_t>(k)];
  if (xk.is_zero())
    fail(ErrKind::ZeroClusterValue, "cluster value at vertex " + std::to_string(k) + " is zero");
  const int d = s.quiver.multiplicity(k);
  const auto& str = s.strings[static_cast<std::size_t>(k)];
  if (static_cast<int>(str.size()) != d + 1)
    fail(ErrKind::ShapeViolation, "string length does not match multiplicity at vertex " +
                                      std::to_string(k));

  // u-monomials are independent of r; build the powers u^0..u^d by chained
  // products so the sum costs 2d neighbor-monomial multiplies. The stable
  // v-monomials reduce to per-frozen-neighbor exponent tables.
  Value u_gt = Value::one(s.ring), u_lt = Value::one(s.ring);
  struct FrozenEdge {
    const Value* x;
    long long out_cnt, in_cnt;
  };
  std::vector<FrozenEdge> frozen;
  for (int i = 0; i < s.quiver.size(); ++i) {
    if (i == k) continue;
    const long long oc = s.quiver.b(k, i), ic = s.quiver.b(i, k);
    if (oc == 0 && ic == 0) continue;
    const Value& xi = s.values[static_cast<std::size_t>(i)];
    if (s.quiver.is_mutable(i)) {
      if (oc > 0) u_gt = u_gt * xi.pow(static_cast<std::uint64_t>(oc));
      if (ic > 0) u_lt = u_lt * xi.pow(static_cast<std::uint64_t>(ic));
    } else {
      frozen.push_back({&xi, oc, ic});
    }
  }
  std::vector<Value> ugt_pow(static_cast<std::size_t>(d) + 1, Value::one(s.ring));
  std::vector<Value> ult_pow(static_cast<std::size_t>(d) + 1, Value::one(s.ring));
  for (int r = 1; r <= d; ++r) {
    ugt_pow[static_cast<std::size_t>(r)] = ugt_pow[static_cast<std::size_t>(r) - 1] * u_gt;
    ult_pow[static_cast<std::size_t>(r)] = ult_pow[static_cast<std::size_t>(r) - 1] * u_lt;
  }
  auto stable = [&](int r) {
    Value v_gt = Value::one(s.ring), v_lt = Value::one(s.ring);
    for (const auto& fe : frozen) {
      const long long e_gt = r * fe.out_cnt / d, e_lt = r * fe.in_cnt / d;
      if (e_gt > 0) v_gt = v_gt * fe.x->pow(static_cast<std::uint64_t>(e_gt));
      if (e_lt > 0) v_lt = v_lt * fe.x->pow(static_cast<std::uint64_t>(e_lt));
    }
    return std::pair<Value, Value>{v_gt, v_lt};
  };

  Value sum = Value::zero(s.ring);
  for (int r = 0; r <= d; ++r) {
    Value term = str[static_cast<std::size_t>(r)].eval(s.values, s.ring);
    term = term * ugt_pow[static_cast<std::size_t>(r)] * stable(r).first;
    term = term * ult_pow[static_cast<std::size_t>(d - r)] * stable(d - r).second;
    sum = sum + term;
  }
  return sum.div(xk);
}

std::vector<CoeffString> coeff_mutate(const std::vector<CoeffString>& strings, int k) {
  if (k < 0 || k >= static_cast<int>(strings.size()))
    fail(ErrKind::IndexOutOfRange, "no string at vertex " + std::to_string(k));
  std::vector<CoeffString> out = strings;
  auto& str = out[static_cast<std::size_t>(k)];
  std::reverse(str.begin(), str.end());
  return out;
}

Seed mutate(const Seed& s, int k) {
  Value xk_new = generalized_exchange(s, k);
  Seed out;
  out.quiver = quiver_mutate(s.quiver, k);
  out.strings = coeff_mutate(s.strings, k);
  out.values = s.values;
  out.values[static_cast<std::size_t>(k)] = std::move(xk_new);
  out.ring = s.ring;
  return out;
}

Seed apply_sequence(Seed s, const std::vector<int>& ks) {
  for (int k : ks) s = mutate(s, k);
  return s;
}

namespace {

// Exponent of v in m; 0 when absent.
long long exp_of(const Monomial& m, VarIdx v) {
  for (std::size_t i = 0; i < m.nfactors(); ++i)
    if (m.var_at(i) == v) return m.exp_at(i);
  return 0;
}

// Largest monomial dividing every term of p (empty for the zero polynomial).
std::map<VarIdx, long long> monomial_content(const Poly& p) {
  std::map<VarIdx, long long> content;
  if (p.is_zero()) return content;
  const Monomial& first = p.terms().front().m;
  for (std::size_t i = 0; i < first.nfactors(); ++i)
    content[first.var_at(i)] = first.exp_at(i);
  for (const auto& t : p.terms()) {
    for (auto it = content.begin(); it != content.end();) {
      const long long e = exp_of(t.m, it->first);
      if (e == 0) {
        it = content.erase(it);
      } else {
        it->second = std::min(it->second, e);
        ++it;
      }
    }
    if (content.empty()) break;
  }
  return content;
}

Poly monomial_poly(const std::map<VarIdx, long long>& m) {
  Monomial mono;
  for (const auto& [v, e] : m) mono = mono * Monomial::var(v, static_cast<std::uint32_t>(e));
  return Poly::monomial(mono, Rat(1));
}

// Canonical form: fold negative denominator exponents into num, then cancel
// the common variable factors between num and the denominator monomial.
LaurentVal lv_normalize(Poly num, std::map<VarIdx, long long> den) {
  if (num.is_zero()) return LaurentVal{Poly::zero(), {}};
  std::map<VarIdx, long long> neg;
  for (auto it = den.begin(); it != den.end();) {
    if (it->second < 0) {
      neg[it->first] = -it->second;
      it = den.erase(it);
    } else if (it->second == 0) {
      it = den.erase(it);
    } else {
      ++it;
    }
  }
  if (!neg.empty()) num = num * monomial_poly(neg);
  const auto content = monomial_content(num);
  std::map<VarIdx, long long> strip;
  for (auto& [v, e] : den) {
    auto it = content.find(v);
    if (it == content.end()) continue;
    const long long t = std::min(e, it->second);
    if (t > 0) {
      strip[v] = t;
      e -= t;
    }
  }
  if (!strip.empty()) num = num.div_exact(monomial_poly(strip));
  for (auto it = den.begin(); it != den.end();)
    it = it->second == 0 ? den.erase(it) : std::next(it);
  return LaurentVal{std::move(num), std::move(den)};
}

LaurentVal lv_const(long long c) { return LaurentVal{Poly::constant(Rat(static_cast<long>(c))), {}}; }

LaurentVal lv_mul(const LaurentVal& a, const LaurentVal& b) {
  std::map<VarIdx, long long> den = a.den;
  for (const auto& [v, e] : b.den) den[v] += e;
  return lv_normalize(a.num * b.num, std::move(den));
}

LaurentVal lv_pow(const LaurentVal& a, std::uint64_t e) {
  std::map<VarIdx, long long> den = a.den;
  for (auto& [v, x] : den) x *= static_cast<long long>(e);
  return lv_normalize(a.num.pow(e), std::move(den));
}

LaurentVal lv_add(const LaurentVal& a, const LaurentVal& b) {
  std::map<VarIdx, long long> den = a.den;
  for (const auto& [v, e] : b.den) den[v] = std::max(den[v], e);
  std::map<VarIdx, long long> lift_a, lift_b;
  for (const auto& [v, e] : den) {
    const auto ia = a.den.find(v), ib = b.den.find(v);
    const long long ea = ia == a.den.end() ? 0 : ia->second;
    const long long eb = ib == b.den.end() ? 0 : ib->second;
    if (e > ea) lift_a[v] = e - ea;
    if (e > eb) lift_b[v] = e - eb;
  }
  Poly num = a.num * monomial_poly(lift_a) + b.num * monomial_poly(lift_b);
  return lv_normalize(std::move(num), std::move(den));
}

// a / b; exact because a monomial-free divisor of a Laurent quotient must
// divide the numerator outright. Error(NotDivisible) otherwise.
LaurentVal lv_div(const LaurentVal& a, const LaurentVal& b) {
  if (b.num.is_zero()) fail(ErrKind::ZeroClusterValue, "division by a zero cluster value");
  const auto s = monomial_content(b.num);
  const Poly bn = s.empty() ? b.num : b.num.div_exact(monomial_poly(s));
  Poly q = a.num.div_exact(bn);
  std::map<VarIdx, long long> den = a.den;
  for (const auto& [v, e] : s) den[v] += e;
  for (const auto& [v, e] : b.den) den[v] -= e;
  return lv_normalize(std::move(q), std::move(den));
}

}  // namespace

Fp LaurentVal::eval_fp(const std::vector<Fp>& point) const {
  Fp out = num.eval_fp(point);
  for (const auto& [v, e] : den) {
    if (v >= point.size())
      fail(ErrKind::MissingVariable, "evaluation point lacks variable " + std::to_string(v));
    const Fp& x = point[v];
    if (x.residue() == 0) fail(ErrKind::Singular, "laurent denominator vanishes at the point");
    out = out / x.pow(static_cast<std::uint64_t>(e));
  }
  return out;
}

std::vector<LaurentVal> laurent_orbit_values(const Seed& s, const std::vector<int>& ks) {
  if (s.ring.kind != RingKind::Symbolic)
    fail(ErrKind::RingMismatch, "laurent orbit requires a symbolic seed");
  validate_seed(s);
  std::vector<LaurentVal> vals;
  vals.reserve(s.values.size());
  for (const auto& x : s.values) {
    Poly p = x.is_rational() ? Poly::constant(x.as_rat()) : x.as_poly();
    vals.push_back(lv_normalize(std::move(p), {}));
  }
  GQuiver q = s.quiver;
  std::vector<CoeffString> strings = s.strings;
  for (int k : ks) {
    if (q.is_frozen(k)) fail(ErrKind::NotMutable, "cannot mutate frozen vertex " + std::to_string(k));
    const int d = q.multiplicity(k);
    const auto& str = strings[static_cast<std::size_t>(k)];

    LaurentVal u_gt = lv_const(1), u_lt = lv_const(1);
    struct FrozenEdge {
      const LaurentVal* x;
      long long out_cnt, in_cnt;
    };
    std::vector<FrozenEdge> frozen;
    for (int i = 0; i < q.size(); ++i) {
      if (i == k) continue;
      const long long oc = q.b(k, i), ic = q.b(i, k);
      if (oc == 0 && ic == 0) continue;
      const LaurentVal& xi = vals[static_cast<std::size_t>(i)];
      if (q.is_mutable(i)) {
        if (oc > 0) u_gt = lv_mul(u_gt, lv_pow(xi, static_cast<std::uint64_t>(oc)));
        if (ic > 0) u_lt = lv_mul(u_lt, lv_pow(xi, static_cast<std::uint64_t>(ic)));
      } else {
        frozen.push_back({&xi, oc, ic});
      }
    }
    LaurentVal sum = lv_const(0);
    for (int r = 0; r <= d; ++r) {
      LaurentVal term = lv_const(str[static_cast<std::size_t>(r)].coeff);
      for (const auto& [w, e] : str[static_cast<std::size_t>(r)].powers)
        term = lv_mul(term, lv_pow(vals[static_cast<std::size_t>(w)],
                                   static_cast<std::uint64_t>(e)));
      term = lv_mul(term, lv_pow(u_gt, static_cast<std::uint64_t>(r)));
      term = lv_mul(term, lv_pow(u_lt, static_cast<std::uint64_t>(d - r)));
      for (const auto& fe : frozen) {
        const long long e_gt = static_cast<long long>(r) * fe.out_cnt / d;
        const long long e_lt = static_cast<long long>(d - r) * fe.in_cnt / d;
        if (e_gt > 0) term = lv_mul(term, lv_pow(*fe.x, static_cast<std::uint64_t>(e_gt)));
        if (e_lt > 0) term = lv_mul(term, lv_pow(*fe.x, static_cast<std::uint64_t>(e_lt)));
      }
      sum = lv_add(sum, term);
    }
    if (vals[static_cast<std::size_t>(k)].num.is_zero())
      fail(ErrKind::ZeroClusterValue, "cluster value at vertex " + std::to_string(k) + " is zero");
    vals[static_cast<std::size_t>(k)] = lv_div(sum, vals[static_cast<std::size_t>(k)]);
    q = quiver_mutate(q, k);
    strings = coeff_mutate(strings, k);
  }
  return vals;
}

nlohmann::json seed_to_json(const Seed& s, bool with_values) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (int v = 0; v < s.quiver.size(); ++v) {
    j["vertices"].push_back({{"id", v},
                             {"frozen", s.quiver.is_frozen(v)},
                             {"multiplicity", s.quiver.multiplicity(v)},
                             {"label", s.quiver.label(v)}});
  }
  j["edges"] = nlohmann::json::array();
  for (const auto& [pair, cnt] : s.quiver.edges())
    j["edges"].push_back({{"from", pair.first}, {"to", pair.second}, {"count", cnt}});
  nlohmann::json strings = nlohmann::json::object();
  for (int v = 0; v < s.quiver.size(); ++v) {
    if (s.quiver.is_frozen(v)) continue;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& mono : s.strings[static_cast<std::size_t>(v)]) {
      nlohmann::json powers = nlohmann::json::object();
      for (const auto& [w, e] : mono.powers) powers[std::to_string(w)] = e;
      arr.push_back({{"coeff", mono.coeff}, {"powers", powers}});
    }
    strings[std::to_string(v)] = arr;
  }
  j["strings"] = strings;
  if (with_values) {
    j["ring"] = ring_to_json(s.ring);
    nlohmann::json vals = nlohmann::json::array();
    for (const auto& x : s.values) vals.push_back(x.str(s.ring));
    j["values"] = vals;
  }
  return j;
}

Seed seed_from_json(const nlohmann::json& j) {
  for (const char* key : {"vertices", "edges", "strings"})
    if (!j.contains(key)) fail(ErrKind::ParseError, std::string("seed json lacks '") + key + "'");
  Seed s;
  int next = 0;
  for (const auto& vj : j.at("vertices")) {
    if (vj.at("id").get<int>() != next)
      fail(ErrKind::ParseError, "vertex ids must be dense and sorted from 0");
    s.quiver.add_vertex(vj.value("label", std::string("x") + std::to_string(next)),
                        vj.value("frozen", false), vj.value("multiplicity", 1));
    ++next;
  }
  for (const auto& ej : j.at("edges"))
    s.quiver.add_edges(ej.at("from").get<int>(), ej.at("to").get<int>(),
                       ej.at("count").get<long long>());
  s.strings.assign(static_cast<std::size_t>(s.quiver.size()), CoeffString{});
  for (int v = 0; v < s.quiver.size(); ++v)
    if (s.quiver.is_mutable(v))
      s.strings[static_cast<std::size_t>(v)] = trivial_string(s.quiver.multiplicity(v));
  auto id_of = [](const std::string& key) {
    try {
      return std::stoi(key);
    } catch (const std::exception&) {
      fail(ErrKind::ParseError, "non-numeric vertex key '" + key + "'");
    }
  };
  for (const auto& [key, arr] : j.at("strings").items()) {
    const int v = id_of(key);
    if (v < 0 || v >= s.quiver.size() || s.quiver.is_frozen(v))
      fail(ErrKind::ParseError, "string given for invalid or frozen vertex " + key);
    CoeffString str;
    for (const auto& mj : arr) {
      CoeffMonomial mono;
      mono.coeff = mj.value("coeff", 1LL);
      if (mj.contains("powers"))
        for (const auto& [w, e] : mj.at("powers").items())
          mono.powers[id_of(w)] = e.get<long>();
      str.push_back(std::move(mono));
    }
    s.strings[static_cast<std::size_t>(v)] = std::move(str);
  }
  if (j.contains("values")) {
    if (!j.contains("ring")) fail(ErrKind::ParseError, "seed values given without a ring");
    s.ring = ring_from_json(j.at("ring"));
    for (const auto& vs : j.at("values"))
      s.values.push_back(Value::parse(vs.get<std::string>(), s.ring));
  } else {
    s.ring = RingSpec::rational();
    s.values.assign(static_cast<std::size_t>(s.quiver.size()), Value::one(s.ring));
  }
  validate_seed(s);
  return s;
}

}  // namespace sclab
