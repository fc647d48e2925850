#include "sclab/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sclab {

namespace {

using AccMap = std::unordered_map<Monomial, Rat, MonomialHash>;

void acc_add(AccMap& acc, const Monomial& m, const Rat& c) {
  auto [it, fresh] = acc.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

Poly from_acc(AccMap&& acc) {
  std::vector<PTerm> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) out.push_back(PTerm{m, std::move(c)});
  return Poly::from_terms(std::move(out));
}

}  // namespace

Poly Poly::constant(const Rat& c) {
  Poly p;
  if (c != 0) p.t_.push_back(PTerm{Monomial::one(), rat_canon(c)});
  return p;
}

Poly Poly::variable(VarIdx v) {
  Poly p;
  p.t_.push_back(PTerm{Monomial::var(v), Rat(1)});
  return p;
}

Poly Poly::monomial(Monomial m, Rat c) {
  Poly p;
  if (c != 0) p.t_.push_back(PTerm{std::move(m), rat_canon(std::move(c))});
  return p;
}

Poly Poly::from_terms(std::vector<PTerm> terms) {
  Poly p;
  p.t_ = std::move(terms);
  p.sort_and_compress();
  return p;
}

void Poly::sort_and_compress() {
  std::sort(t_.begin(), t_.end(), [](const PTerm& a, const PTerm& b) { return a.m.cmp(b.m) > 0; });
  std::size_t w = 0;
  for (std::size_t r = 0; r < t_.size();) {
    Monomial m = t_[r].m;
    Rat c = std::move(t_[r].c);
    ++r;
    while (r < t_.size() && t_[r].m == m) {
      c += t_[r].c;
      ++r;
    }
    if (c != 0) {
      t_[w].m = std::move(m);
      t_[w].c = rat_canon(std::move(c));
      ++w;
    }
  }
  t_.resize(w);
}

Rat Poly::constant_value() const {
  if (t_.empty()) return Rat(0);
  if (t_.size() != 1 || !t_[0].m.is_one()) fail(ErrKind::ParseError, "constant_value on non-constant polynomial");
  return t_[0].c;
}

std::uint64_t Poly::total_degree() const {
  std::uint64_t d = 0;
  for (const PTerm& t : t_) d = std::max(d, t.m.degree());
  return d;
}

const PTerm& Poly::leading() const {
  if (t_.empty()) fail(ErrKind::ParseError, "leading term of zero polynomial");
  return t_[0];
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.t_.reserve(t_.size() + o.t_.size());
  std::size_t i = 0, j = 0;
  while (i < t_.size() && j < o.t_.size()) {
    int c = t_[i].m.cmp(o.t_[j].m);
    if (c > 0) {
      r.t_.push_back(t_[i++]);
    } else if (c < 0) {
      r.t_.push_back(o.t_[j++]);
    } else {
      Rat s = t_[i].c + o.t_[j].c;
      if (s != 0) r.t_.push_back(PTerm{t_[i].m, std::move(s)});
      ++i, ++j;
    }
  }
  while (i < t_.size()) r.t_.push_back(t_[i++]);
  while (j < o.t_.size()) r.t_.push_back(o.t_[j++]);
  TermBudget::check(r.t_.size());
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (PTerm& t : r.t_) t.c = -t.c;
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::mul_scalar(const Rat& c) const {
  if (c == 0) return Poly();
  Poly r = *this;
  for (PTerm& t : r.t_) t.c = rat_canon(t.c * c);
  return r;
}

Poly Poly::mul_serial(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  AccMap acc;
  acc.reserve(std::min<std::size_t>(a.t_.size() * b.t_.size(), std::size_t(1) << 20));
  std::size_t ticks = 0;
  for (const PTerm& ta : a.t_) {
    for (const PTerm& tb : b.t_) {
      acc_add(acc, ta.m * tb.m, ta.c * tb.c);
      if ((++ticks & 0x3ff) == 0) TermBudget::check(acc.size());
    }
  }
  TermBudget::check(acc.size());
  return from_acc(std::move(acc));
}

Poly Poly::mul_parallel(const Poly& a, const Poly& b) {
#ifdef _OPENMP
  if (a.is_zero() || b.is_zero()) return Poly();
  const std::vector<PTerm>& big = a.t_.size() >= b.t_.size() ? a.t_ : b.t_;
  const std::vector<PTerm>& small = a.t_.size() >= b.t_.size() ? b.t_ : a.t_;
  int nthreads = omp_get_max_threads();
  std::vector<AccMap> parts(static_cast<std::size_t>(nthreads));
  bool budget_hit = false;
#pragma omp parallel
  {
    AccMap& acc = parts[static_cast<std::size_t>(omp_get_thread_num())];
    std::size_t ticks = 0;
#pragma omp for schedule(static)
    for (long i = 0; i < static_cast<long>(big.size()); ++i) {
      if (budget_hit) continue;
      for (const PTerm& tb : small) {
        acc_add(acc, big[static_cast<std::size_t>(i)].m * tb.m, big[static_cast<std::size_t>(i)].c * tb.c);
      }
      if ((++ticks & 0xff) == 0) {
        std::uint64_t cap = TermBudget::get();
        if (cap != 0 && acc.size() > cap) {
#pragma omp atomic write
          budget_hit = true;
        }
      }
    }
  }
  if (budget_hit) fail(ErrKind::BudgetExceeded, "polynomial term budget exceeded in parallel multiply");
  AccMap& acc = parts[0];
  for (std::size_t t = 1; t < parts.size(); ++t) {
    for (auto& [m, c] : parts[t]) acc_add(acc, m, c);
    AccMap().swap(parts[t]);
    TermBudget::check(acc.size());
  }
  TermBudget::check(acc.size());
  return from_acc(std::move(acc));
#else
  return mul_serial(a, b);
#endif
}

Poly Poly::operator*(const Poly& o) const {
#ifdef _OPENMP
  // The parallel path pays a per-thread map merge; only worth it for big products.
  if (omp_get_max_threads() > 1 && t_.size() * o.t_.size() > (std::size_t(1) << 16)) {
    return mul_parallel(*this, o);
  }
#endif
  return mul_serial(*this, o);
}

Poly Poly::pow(std::uint64_t e) const {
  Poly base = *this;
  Poly r = Poly::constant(1);
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

bool Poly::operator==(const Poly& o) const {
  if (t_.size() != o.t_.size()) return false;
  for (std::size_t i = 0; i < t_.size(); ++i) {
    if (t_[i].c != o.t_[i].c || !(t_[i].m == o.t_[i].m)) return false;
  }
  return true;
}

Poly Poly::div_exact(const Poly& q) const {
  if (q.is_zero()) fail(ErrKind::NotDivisible, "exact division by zero polynomial");
  if (is_zero()) return Poly();
  std::map<Monomial, Rat, MonomialGrlexGreater> r;
  for (const PTerm& t : t_) r.emplace(t.m, t.c);
  const Monomial& qm = q.leading().m;
  const Rat& qc = q.leading().c;
  Poly quot;
  while (!r.empty()) {
    auto lead = r.begin();
    Monomial tm;
    if (!lead->first.divide_by(qm, tm)) {
      fail(ErrKind::NotDivisible, "exact polynomial division has a remainder");
    }
    Rat tc = rat_canon(lead->second / qc);
    // Leading monomials strictly decrease, so the quotient is built in order.
    quot.t_.push_back(PTerm{tm, tc});
    for (const PTerm& t : q.t_) {
      Monomial m = tm * t.m;
      Rat delta = tc * t.c;
      auto [it, fresh] = r.try_emplace(m, -delta);
      if (!fresh) {
        it->second -= delta;
        if (it->second == 0) r.erase(it);
      }
    }
    TermBudget::check(r.size() + quot.t_.size());
  }
  return quot;
}

Fp Poly::eval_fp(const std::vector<Fp>& assign) const {
  std::uint64_t p = assign.empty() ? Fp::default_modulus() : assign[0].modulus();
  Fp acc(0, p);
  for (const PTerm& t : t_) {
    // c = num/den evaluated as num * den^{-1} mod p.
    Rat c = t.c;
    mpz_class num = c.get_num(), den = c.get_den();
    Fp fc = Fp::from_int(0, p);
    {
      mpz_class nm = num % static_cast<long>(p);  // p < 2^62 fits long on LP64
      if (nm < 0) nm += static_cast<long>(p);
      mpz_class dm = den % static_cast<long>(p);
      Fp fn(nm.get_ui(), p), fd(dm.get_ui(), p);
      fc = fn / fd;
    }
    Fp mv(1, p);
    for (std::size_t i = 0; i < t.m.nfactors(); ++i) {
      VarIdx v = t.m.var_at(i);
      if (v >= assign.size()) fail(ErrKind::MissingVariable, "no assignment for variable index " + std::to_string(v));
      mv = mv * assign[v].pow(t.m.exp_at(i));
    }
    acc = acc + fc * mv;
  }
  return acc;
}

Rat Poly::eval_rat(const std::vector<Rat>& assign) const {
  Rat acc(0);
  for (const PTerm& t : t_) {
    Rat mv(1);
    for (std::size_t i = 0; i < t.m.nfactors(); ++i) {
      VarIdx v = t.m.var_at(i);
      if (v >= assign.size()) fail(ErrKind::MissingVariable, "no assignment for variable index " + std::to_string(v));
      Rat base = assign[v];
      std::uint32_t e = t.m.exp_at(i);
      Rat pw(1);
      while (e) {
        if (e & 1) pw *= base;
        e >>= 1;
        if (e) base *= base;
      }
      mv *= pw;
    }
    acc += t.c * mv;
  }
  return rat_canon(acc);
}

std::string Poly::str(const VarNamer& namer) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < t_.size(); ++i) {
    const PTerm& t = t_[i];
    Rat c = t.c;
    bool neg = c < 0;
    if (i == 0) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    Rat mag = neg ? Rat(-c) : c;
    if (t.m.is_one()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      for (std::size_t f = 0; f < t.m.nfactors(); ++f) {
        if (f) os << "*";
        VarIdx v = t.m.var_at(f);
        os << (namer ? namer(v) : "v" + std::to_string(v));
        if (t.m.exp_at(f) != 1) os << "^" << t.m.exp_at(f);
      }
    }
  }
  return os.str();
}

namespace {

class Parser {
public:
  Parser(const std::string& s, const VarResolver& resolver) : s_(s), res_(resolver) {}

  Poly run() {
    Poly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail(ErrKind::ParseError, "trailing characters in polynomial at offset " + std::to_string(pos_));
    return p;
  }

private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Poly expr() {
    bool neg = false;
    if (eat('+')) {
    } else if (eat('-')) {
      neg = true;
    }
    Poly acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+')) {
        acc = acc + term();
      } else if (eat('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  Poly factor() {
    Poly base = atom();
    if (eat('^')) {
      std::uint64_t e = uint_lit();
      base = base.pow(e);
    }
    return base;
  }

  Poly atom() {
    char c = peek();
    if (c == '(') {
      eat('(');
      Poly p = expr();
      if (!eat(')')) fail(ErrKind::ParseError, "expected ')' at offset " + std::to_string(pos_));
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = int_lit();
      if (eat('/')) {
        mpz_class den = int_lit();
        if (den == 0) fail(ErrKind::ParseError, "zero denominator literal");
        return Poly::constant(rat_canon(Rat(num, den)));
      }
      return Poly::constant(Rat(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '[' ||
              s_[pos_] == ']' || s_[pos_] == ',')) {
        name.push_back(s_[pos_++]);
      }
      if (!res_) fail(ErrKind::ParseError, "no variable resolver for name '" + name + "'");
      return Poly::variable(res_(name));
    }
    fail(ErrKind::ParseError, "unexpected character at offset " + std::to_string(pos_));
  }

  mpz_class int_lit() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail(ErrKind::ParseError, "expected integer at offset " + std::to_string(pos_));
    return mpz_class(s_.substr(start, pos_ - start));
  }

  std::uint64_t uint_lit() {
    mpz_class z = int_lit();
    if (!z.fits_ulong_p()) fail(ErrKind::ParseError, "exponent too large");
    return z.get_ui();
  }

  const std::string& s_;
  const VarResolver& res_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(const std::string& text, const VarResolver& resolver) {
  return Parser(text, resolver).run();
}

}  // namespace sclab
