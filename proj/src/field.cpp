#include "twist/field.hpp"

#include <algorithm>
#include <sstream>

namespace twist {

namespace {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t reduce_ll(long long v, std::uint64_t p) {
  long long r = v % (long long)p;
  if (r < 0) r += (long long)p;
  return (std::uint64_t)r;
}

const std::vector<std::uint64_t>& coeffs_of(const FieldElement& x) {
  return std::get<std::vector<std::uint64_t>>(x.rep);
}

const Rational& rat_of(const FieldElement& x) { return std::get<Rational>(x.rep); }

// Division with remainder by a monic divisor over F_p; returns the remainder,
// trimmed to length < divisor degree.
std::vector<std::uint64_t> poly_rem(std::vector<std::uint64_t> a,
                                    const std::vector<std::uint64_t>& m, std::uint64_t p) {
  const std::size_t deg_m = m.size() - 1;
  while (a.size() > deg_m) {
    std::uint64_t lead = a.back();
    std::size_t shift = a.size() - 1 - deg_m;
    if (lead != 0) {
      for (std::size_t i = 0; i <= deg_m; ++i) {
        std::uint64_t sub = lead * m[i] % p;
        std::uint64_t& c = a[shift + i];
        c = (c + p - sub) % p;
      }
    }
    a.pop_back();
  }
  a.resize(deg_m, 0);
  return a;
}

std::vector<std::uint64_t> poly_mul(const std::vector<std::uint64_t>& a,
                                    const std::vector<std::uint64_t>& b, std::uint64_t p) {
  std::vector<std::uint64_t> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  return c;
}

std::uint64_t inv_mod_p(std::uint64_t a, std::uint64_t p) {
  // extended euclid on signed values; p < 2^31
  long long t = 0, newt = 1, r = (long long)p, newr = (long long)a;
  while (newr != 0) {
    long long q = r / newr;
    std::swap(t -= q * newt, newt);
    std::swap(r -= q * newr, newr);
  }
  if (r != 1) fail(Errc::DivisionByZero, "element not invertible mod p");
  if (t < 0) t += (long long)p;
  return (std::uint64_t)t;
}

int poly_degree(const std::vector<std::uint64_t>& a) {
  for (int i = (int)a.size() - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

// Plain polynomial arithmetic over F_p on trimmed vectors, used for the
// extended euclidean inverse and the irreducibility check.
std::vector<std::uint64_t> poly_trim(std::vector<std::uint64_t> a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

std::vector<std::uint64_t> poly_sub(std::vector<std::uint64_t> a,
                                    const std::vector<std::uint64_t>& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  return poly_trim(std::move(a));
}

// Euclidean division a = q*b + r over F_p (b nonzero); returns {q, r}.
std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>> poly_divmod(
    std::vector<std::uint64_t> a, const std::vector<std::uint64_t>& b, std::uint64_t p) {
  a = poly_trim(std::move(a));
  int db = poly_degree(b);
  std::uint64_t inv_lead = inv_mod_p(b[db], p);
  std::vector<std::uint64_t> q;
  while (true) {
    int da = poly_degree(a);
    if (da < db) break;
    std::uint64_t c = a[da] * inv_lead % p;
    std::size_t shift = (std::size_t)(da - db);
    if ((int)q.size() < da - db + 1) q.resize(da - db + 1, 0);
    q[shift] = c;
    for (int i = 0; i <= db; ++i) {
      std::uint64_t sub = c * b[i] % p;
      a[shift + i] = (a[shift + i] + p - sub) % p;
    }
  }
  return {poly_trim(std::move(q)), poly_trim(std::move(a))};
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (!is_prime_u64(p)) fail(Errc::NonPrimeModulus, "characteristic must be prime");
  if (p >= (1ull << 31)) fail(Errc::TooLarge, "prime too large");
  return Field(Kind::PrimeFinite, p, {0, 1});
}

Field Field::extension(std::uint64_t p, std::vector<std::uint64_t> modulus) {
  if (!is_prime_u64(p)) fail(Errc::NonPrimeModulus, "characteristic must be prime");
  if (p >= (1ull << 20)) fail(Errc::TooLarge, "prime too large for an extension field");
  for (auto& c : modulus) c %= p;
  if (modulus.size() < 3 || modulus.back() != 1)
    fail(Errc::ReducibleExtensionModulus, "modulus must be monic of degree >= 2");
  unsigned deg = unsigned(modulus.size() - 1);
  if (deg > 8) fail(Errc::TooLarge, "extension degree too large");
  double size = 1;
  for (unsigned i = 0; i < deg; ++i) size *= double(p);
  if (size > double(1ull << 40)) fail(Errc::TooLarge, "extension field too large to handle");
  // Trial factorization: a proper factor, if any, has a monic partner of
  // degree <= deg/2.
  for (unsigned d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;  // monic candidates of degree d
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<std::uint64_t> cand(d + 1, 0);
      std::uint64_t t = idx;
      for (unsigned i = 0; i < d; ++i) { cand[i] = t % p; t /= p; }
      cand[d] = 1;
      auto [q, r] = poly_divmod(modulus, cand, p);
      if (r.empty()) fail(Errc::ReducibleExtensionModulus, "modulus is reducible over F_p");
    }
  }
  return Field(Kind::ExtensionFinite, p, std::move(modulus));
}

Field Field::rationals() { return Field(Kind::Rationals, 0, {}); }

Field Field::parse(const std::string& spec) {
  if (spec == "Q") return rationals();
  if (spec.rfind("Fq:", 0) != 0) fail(Errc::ValidationError, "bad field spec: " + spec);
  std::uint64_t p = 0;
  long long deg = 0;
  std::vector<std::uint64_t> mod;
  std::string body = spec.substr(3);
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t eq = body.find('=', pos);
    if (eq == std::string::npos) fail(Errc::ValidationError, "bad field spec: " + spec);
    std::string key = body.substr(pos, eq - pos);
    std::size_t end;
    if (key == "mod") {
      if (body[eq + 1] != '[') fail(Errc::ValidationError, "bad field spec: " + spec);
      end = body.find(']', eq);
      if (end == std::string::npos) fail(Errc::ValidationError, "bad field spec: " + spec);
      std::stringstream ss(body.substr(eq + 2, end - eq - 2));
      std::string item;
      while (std::getline(ss, item, ','))
        mod.push_back((std::uint64_t)std::stoll(item));
      ++end;
    } else {
      end = body.find(',', eq);
      if (end == std::string::npos) end = body.size();
      long long v = std::stoll(body.substr(eq + 1, end - eq - 1));
      if (key == "p") p = (std::uint64_t)v;
      else if (key == "deg") deg = v;
      else fail(Errc::ValidationError, "unknown field spec key: " + key);
    }
    pos = end < body.size() && body[end] == ',' ? end + 1 : end;
  }
  if (p == 0) fail(Errc::ValidationError, "field spec lacks p");
  if (deg <= 1 && mod.empty()) return prime(p);
  if (!mod.empty() && deg != 0 && (long long)mod.size() != deg + 1)
    fail(Errc::ValidationError, "field spec degree does not match modulus");
  return extension(p, mod);
}

std::string Field::spec() const {
  switch (kind_) {
    case Kind::Rationals: return "Q";
    case Kind::PrimeFinite: return "Fq:p=" + std::to_string(p_);
    case Kind::ExtensionFinite: {
      std::string s = "Fq:p=" + std::to_string(p_) + ",deg=" + std::to_string(degree()) + ",mod=[";
      for (std::size_t i = 0; i < modulus_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(modulus_[i]);
      }
      return s + "]";
    }
  }
  return {};
}

std::uint64_t Field::order() const {
  if (!finite()) fail(Errc::WrongType, "order() on an infinite field");
  std::uint64_t n = 1;
  for (unsigned i = 0; i < degree(); ++i) n *= p_;
  return n;
}

void Field::require_characteristic_not_2_3() const {
  if (finite() && (p_ == 2 || p_ == 3))
    fail(Errc::CharacteristicTwoOrThreeRejected, "characteristic 2 and 3 are not supported here");
}

FieldElement Field::zero() const {
  if (kind_ == Kind::Rationals) return {Rational(0)};
  return {std::vector<std::uint64_t>(degree(), 0)};
}

FieldElement Field::one() const { return from_int(1); }

FieldElement Field::from_int(long long v) const {
  if (kind_ == Kind::Rationals) return {Rational(v)};
  std::vector<std::uint64_t> c(degree(), 0);
  c[0] = reduce_ll(v, p_);
  return {c};
}

FieldElement Field::from_rational(const Rational& r) const {
  if (kind_ == Kind::Rationals) return {r};
  // embed n/d via modular division; d must be a unit mod p
  long long n = (long long)numerator(r).convert_to<long long>();
  long long d = (long long)denominator(r).convert_to<long long>();
  std::uint64_t dn = reduce_ll(d, p_);
  if (dn == 0) fail(Errc::DivisionByZero, "denominator vanishes in F_p");
  return mul(from_int(n), inv(from_int((long long)dn)));
}

FieldElement Field::from_coeffs(const std::vector<long long>& coeffs) const {
  if (kind_ == Kind::Rationals) fail(Errc::WrongType, "coefficient lists are for finite fields");
  if (coeffs.size() > degree()) fail(Errc::SpecMismatch, "too many coefficients");
  std::vector<std::uint64_t> c(degree(), 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = reduce_ll(coeffs[i], p_);
  return {c};
}

bool Field::contains(const FieldElement& x) const {
  if (kind_ == Kind::Rationals) return std::holds_alternative<Rational>(x.rep);
  if (!std::holds_alternative<std::vector<std::uint64_t>>(x.rep)) return false;
  const auto& c = coeffs_of(x);
  if (c.size() != degree()) return false;
  return std::all_of(c.begin(), c.end(), [&](std::uint64_t v) { return v < p_; });
}

void Field::check(const FieldElement& x) const {
  if (!contains(x)) fail(Errc::SpecMismatch, "element does not belong to " + spec());
}

bool Field::is_zero(const FieldElement& x) const { return x == zero(); }
bool Field::is_one(const FieldElement& x) const { return x == one(); }

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
  if (kind_ == Kind::Rationals) return {rat_of(a) + rat_of(b)};
  auto c = coeffs_of(a);
  const auto& d = coeffs_of(b);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (c[i] + d[i]) % p_;
  return {c};
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
  return add(a, neg(b));
}

FieldElement Field::neg(const FieldElement& a) const {
  if (kind_ == Kind::Rationals) return {-rat_of(a)};
  auto c = coeffs_of(a);
  for (auto& v : c) v = v == 0 ? 0 : p_ - v;
  return {c};
}

std::vector<std::uint64_t> Field::poly_mul_mod(const std::vector<std::uint64_t>& a,
                                               const std::vector<std::uint64_t>& b) const {
  return poly_rem(poly_mul(a, b, p_), modulus_, p_);
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
  switch (kind_) {
    case Kind::Rationals: return {rat_of(a) * rat_of(b)};
    case Kind::PrimeFinite: return {std::vector<std::uint64_t>{mulmod(coeffs_of(a)[0], coeffs_of(b)[0])}};
    case Kind::ExtensionFinite: return {poly_mul_mod(coeffs_of(a), coeffs_of(b))};
  }
  return {};
}

FieldElement Field::inv(const FieldElement& a) const {
  if (is_zero(a)) fail(Errc::DivisionByZero, "inverse of zero");
  switch (kind_) {
    case Kind::Rationals: return {Rational(1) / rat_of(a)};
    case Kind::PrimeFinite: return {std::vector<std::uint64_t>{inv_mod_p(coeffs_of(a)[0], p_)}};
    case Kind::ExtensionFinite: {
      // extended euclid over F_p[x] against the (irreducible) modulus
      std::vector<std::uint64_t> r0 = modulus_, r1 = poly_trim(coeffs_of(a));
      std::vector<std::uint64_t> t0, t1{1};
      while (poly_degree(r1) > 0) {
        auto [q, r2] = poly_divmod(r0, r1, p_);
        auto t2 = poly_sub(t0, poly_mul(q, t1, p_), p_);
        r0 = std::move(r1); r1 = std::move(r2);
        t0 = std::move(t1); t1 = std::move(t2);
      }
      std::uint64_t c = inv_mod_p(r1[0], p_);
      std::vector<std::uint64_t> res(degree(), 0);
      for (std::size_t i = 0; i < t1.size(); ++i) res[i] = t1[i] * c % p_;
      return {res};
    }
  }
  return {};
}

FieldElement Field::div(const FieldElement& a, const FieldElement& b) const {
  return mul(a, inv(b));
}

FieldElement Field::pow(const FieldElement& a, const BigInt& e) const {
  if (e < 0) return pow(inv(a), -e);
  FieldElement base = a, acc = one();
  BigInt k = e;
  while (k > 0) {
    if (bit_test(k, 0)) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

FieldElement Field::frobenius(const FieldElement& a) const {
  if (!finite()) fail(Errc::WrongType, "frobenius needs positive characteristic");
  return pow(a, BigInt(p_));
}

FieldElement Field::element_at(std::uint64_t index) const {
  if (!finite()) fail(Errc::WrongType, "enumeration needs a finite field");
  std::vector<std::uint64_t> c(degree(), 0);
  for (unsigned i = 0; i < degree(); ++i) { c[i] = index % p_; index /= p_; }
  return {c};
}

std::uint64_t Field::index_of(const FieldElement& x) const {
  if (!finite()) fail(Errc::WrongType, "enumeration needs a finite field");
  const auto& c = coeffs_of(x);
  std::uint64_t idx = 0;
  for (unsigned i = degree(); i-- > 0;) idx = idx * p_ + c[i];
  return idx;
}

FieldElement Field::sample(std::mt19937_64& rng) const {
  if (finite()) return element_at(rng() % order());
  long long n = (long long)(rng() % 19) - 9;
  long long d = (long long)(rng() % 9) + 1;
  return {Rational(n, d)};
}

FieldElement Field::sample_nonzero(std::mt19937_64& rng) const {
  for (;;) {
    FieldElement x = sample(rng);
    if (!is_zero(x)) return x;
  }
}

std::string Field::format(const FieldElement& x) const {
  switch (kind_) {
    case Kind::Rationals: {
      const Rational& r = rat_of(x);
      std::ostringstream os;
      os << numerator(r);
      if (denominator(r) != 1) os << '/' << denominator(r);
      return os.str();
    }
    case Kind::PrimeFinite: return std::to_string(coeffs_of(x)[0]);
    case Kind::ExtensionFinite: {
      std::string s = "[";
      const auto& c = coeffs_of(x);
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c[i]);
      }
      return s + "]";
    }
  }
  return {};
}

FieldElement Field::parse_element(const std::string& text) const {
  if (kind_ == Kind::Rationals) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return {Rational(BigInt(text))};
    return {Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)))};
  }
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') fail(Errc::ValidationError, "unterminated coefficient list");
    std::vector<long long> coeffs;
    std::stringstream ss(text.substr(1, text.size() - 2));
    std::string item;
    while (std::getline(ss, item, ',')) coeffs.push_back(std::stoll(item));
    return from_coeffs(coeffs);
  }
  return from_int(std::stoll(text));
}

AdditiveEndo::AdditiveEndo(Field f, std::vector<FieldElement> c)
    : field(std::move(f)), coeffs(std::move(c)) {
  if (coeffs.empty()) coeffs.push_back(field.zero());
  for (const auto& a : coeffs) field.check(a);
  if (!field.finite() && coeffs.size() > 1)
    fail(Errc::SpecMismatch, "over Q an additive endomorphism is a single scalar");
}

FieldElement AdditiveEndo::apply(const FieldElement& x) const {
  field.check(x);
  if (!field.finite()) return field.mul(coeffs[0], x);
  FieldElement acc = field.zero();
  FieldElement xp = x;  // x^{p^i}
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) xp = field.frobenius(xp);
    acc = field.add(acc, field.mul(coeffs[i], xp));
  }
  return acc;
}

bool AdditiveEndo::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [&](const FieldElement& a) { return field.is_zero(a); });
}

}  // namespace twist
