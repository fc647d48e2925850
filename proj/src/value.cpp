#include "sclab/value.hpp"

#include <sstream>

#include "sclab/rng.hpp"

namespace sclab {

VarIdx VarTable::add(const std::string& name) {
  auto it = index_.find(name);
  if (it != index_.end()) return it->second;
  VarIdx v = static_cast<VarIdx>(names_.size());
  names_.push_back(name);
  index_.emplace(name, v);
  return v;
}

VarIdx VarTable::require(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) fail(ErrKind::MissingVariable, "unknown variable name '" + name + "'");
  return it->second;
}

const std::string& VarTable::name(VarIdx v) const {
  if (v >= names_.size()) fail(ErrKind::MissingVariable, "variable index out of range");
  return names_[v];
}

std::string RingSpec::kind_name() const {
  switch (kind) {
    case RingKind::Rational: return "rational";
    case RingKind::PrimeField: return "fp";
    case RingKind::Symbolic: return "symbolic";
  }
  return "?";
}

Value Value::zero(const RingSpec& ring) { return integer(0, ring); }
Value Value::one(const RingSpec& ring) { return integer(1, ring); }

Value Value::integer(long x, const RingSpec& ring) {
  switch (ring.kind) {
    case RingKind::Rational: return Value(Rat(x));
    case RingKind::PrimeField: return Value(Fp::from_int(x, ring.modulus ? ring.modulus : Fp::default_modulus()));
    case RingKind::Symbolic: return Value(Poly::constant(Rat(x)));
  }
  fail(ErrKind::RingMismatch, "bad ring kind");
}

RingKind Value::kind() const {
  if (std::holds_alternative<Rat>(v_)) return RingKind::Rational;
  if (std::holds_alternative<Fp>(v_)) return RingKind::PrimeField;
  return RingKind::Symbolic;
}

bool Value::is_zero() const {
  if (const Rat* r = std::get_if<Rat>(&v_)) return *r == 0;
  if (const Fp* f = std::get_if<Fp>(&v_)) return f->is_zero();
  return std::get<Poly>(v_).is_zero();
}

const Rat& Value::as_rat() const {
  if (const Rat* r = std::get_if<Rat>(&v_)) return *r;
  fail(ErrKind::RingMismatch, "value is not rational");
}

const Fp& Value::as_fp() const {
  if (const Fp* f = std::get_if<Fp>(&v_)) return *f;
  fail(ErrKind::RingMismatch, "value is not a prime-field element");
}

const Poly& Value::as_poly() const {
  if (const Poly* p = std::get_if<Poly>(&v_)) return *p;
  fail(ErrKind::RingMismatch, "value is not a polynomial");
}

namespace {

Fp rat_to_fp(const Rat& r, std::uint64_t p) {
  mpz_class nm = r.get_num() % static_cast<long>(p);
  if (nm < 0) nm += static_cast<long>(p);
  mpz_class dm = r.get_den() % static_cast<long>(p);
  return Fp(nm.get_ui(), p) / Fp(dm.get_ui(), p);
}

// Promotes rationals into the other operand's ring; Fp and Poly never mix.
template <typename OpRat, typename OpFp, typename OpPoly>
Value binop(const Value& a, const Value& b, OpRat fr, OpFp ff, OpPoly fp_) {
  RingKind ka = a.kind(), kb = b.kind();
  if (ka == RingKind::Rational && kb == RingKind::Rational) return Value(fr(a.as_rat(), b.as_rat()));
  if (ka == RingKind::PrimeField || kb == RingKind::PrimeField) {
    if (ka == RingKind::Symbolic || kb == RingKind::Symbolic) {
      fail(ErrKind::RingMismatch, "cannot mix prime-field and polynomial values");
    }
    Fp x = ka == RingKind::PrimeField ? a.as_fp() : rat_to_fp(a.as_rat(), b.as_fp().modulus());
    Fp y = kb == RingKind::PrimeField ? b.as_fp() : rat_to_fp(b.as_rat(), a.as_fp().modulus());
    return Value(ff(x, y));
  }
  Poly x = ka == RingKind::Symbolic ? a.as_poly() : Poly::constant(a.as_rat());
  Poly y = kb == RingKind::Symbolic ? b.as_poly() : Poly::constant(b.as_rat());
  return Value(fp_(x, y));
}

}  // namespace

Value Value::operator+(const Value& o) const {
  return binop(*this, o, [](const Rat& x, const Rat& y) { return rat_canon(x + y); },
               [](const Fp& x, const Fp& y) { return x + y; }, [](const Poly& x, const Poly& y) { return x + y; });
}

Value Value::operator-(const Value& o) const {
  return binop(*this, o, [](const Rat& x, const Rat& y) { return rat_canon(x - y); },
               [](const Fp& x, const Fp& y) { return x - y; }, [](const Poly& x, const Poly& y) { return x - y; });
}

Value Value::operator*(const Value& o) const {
  return binop(*this, o, [](const Rat& x, const Rat& y) { return rat_canon(x * y); },
               [](const Fp& x, const Fp& y) { return x * y; }, [](const Poly& x, const Poly& y) { return x * y; });
}

Value Value::operator-() const {
  if (const Rat* r = std::get_if<Rat>(&v_)) return Value(Rat(-*r));
  if (const Fp* f = std::get_if<Fp>(&v_)) return Value(-*f);
  return Value(-std::get<Poly>(v_));
}

Value Value::div(const Value& o) const {
  if (o.is_zero()) fail(ErrKind::Singular, "division by zero");
  return binop(*this, o, [](const Rat& x, const Rat& y) { return rat_canon(x / y); },
               [](const Fp& x, const Fp& y) { return x / y; },
               [](const Poly& x, const Poly& y) { return x.div_exact(y); });
}

Value Value::pow(std::uint64_t e) const {
  if (const Fp* f = std::get_if<Fp>(&v_)) return Value(f->pow(e));
  if (const Poly* p = std::get_if<Poly>(&v_)) return Value(p->pow(e));
  Rat base = as_rat(), r(1);
  while (e) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return Value(rat_canon(r));
}

bool Value::operator==(const Value& o) const {
  if (kind() != o.kind()) {
    // Rationals compare against promoted constants of other rings.
    if (kind() == RingKind::Rational || o.kind() == RingKind::Rational) return (*this - o).is_zero();
    return false;
  }
  if (const Rat* r = std::get_if<Rat>(&v_)) return *r == o.as_rat();
  if (const Fp* f = std::get_if<Fp>(&v_)) return *f == o.as_fp();
  return std::get<Poly>(v_) == o.as_poly();
}

std::string Value::str(const VarNamer& namer) const {
  if (const Rat* r = std::get_if<Rat>(&v_)) return r->get_str();
  if (const Fp* f = std::get_if<Fp>(&v_)) {
    return std::to_string(f->residue()) + " mod " + std::to_string(f->modulus());
  }
  return std::get<Poly>(v_).str(namer);
}

std::string Value::str(const RingSpec& ring) const {
  if (ring.kind == RingKind::Symbolic && ring.vars) {
    auto vars = ring.vars;
    return str([vars](VarIdx v) { return vars->name(v); });
  }
  return str();
}

Value Value::parse(const std::string& text, const RingSpec& ring) {
  switch (ring.kind) {
    case RingKind::Rational: {
      try {
        return Value(rat_canon(Rat(text)));
      } catch (const std::invalid_argument&) {
        fail(ErrKind::ParseError, "bad rational literal '" + text + "'");
      }
    }
    case RingKind::PrimeField: {
      std::uint64_t p = ring.modulus ? ring.modulus : Fp::default_modulus();
      std::istringstream is(text);
      long long r = 0;
      std::string mod_kw;
      if (!(is >> r)) fail(ErrKind::ParseError, "bad prime-field literal '" + text + "'");
      if (is >> mod_kw) {
        std::uint64_t pp = 0;
        if (mod_kw != "mod" || !(is >> pp)) fail(ErrKind::ParseError, "bad prime-field literal '" + text + "'");
        if (pp != p) fail(ErrKind::RingMismatch, "literal modulus differs from ring modulus");
      }
      return Value(Fp::from_int(r, p));
    }
    case RingKind::Symbolic: {
      auto vars = ring.vars;
      if (!vars) fail(ErrKind::ParseError, "symbolic ring has no variable table");
      return Value(Poly::parse(text, [vars](const std::string& n) { return vars->require(n); }));
    }
  }
  fail(ErrKind::RingMismatch, "bad ring kind");
}

Fp random_fp(std::mt19937_64& g, std::uint64_t p) { return Fp(uniform_below(g, p), p); }

Fp random_fp_nonzero(std::mt19937_64& g, std::uint64_t p) { return Fp(1 + uniform_below(g, p - 1), p); }

Rat random_rat(std::mt19937_64& g, long bound) {
  long num = static_cast<long>(uniform_below(g, static_cast<std::uint64_t>(2 * bound + 1))) - bound;
  long den = 1 + static_cast<long>(uniform_below(g, static_cast<std::uint64_t>(bound)));
  return rat_canon(Rat(num, den));
}

Value random_field_value(const RingSpec& ring, std::mt19937_64& g) {
  switch (ring.kind) {
    case RingKind::Rational: return Value(random_rat(g));
    case RingKind::PrimeField: return Value(random_fp(g, ring.modulus ? ring.modulus : Fp::default_modulus()));
    case RingKind::Symbolic: break;
  }
  fail(ErrKind::RingMismatch, "random values require a field ring");
}

Value random_field_value_nonzero(const RingSpec& ring, std::mt19937_64& g) {
  switch (ring.kind) {
    case RingKind::Rational: {
      Rat r = random_rat(g);
      while (r == 0) r = random_rat(g);
      return Value(r);
    }
    case RingKind::PrimeField: return Value(random_fp_nonzero(g, ring.modulus ? ring.modulus : Fp::default_modulus()));
    case RingKind::Symbolic: break;
  }
  fail(ErrKind::RingMismatch, "random values require a field ring");
}

}  // namespace sclab
