#include "twist/chevalley.hpp"

#include <list>

namespace twist {

UnipotentGroup::UnipotentGroup(StructureConstants sc, Field field)
    : sc_(std::move(sc)), field_(std::move(field)) {}

UnipotentElement UnipotentGroup::identity() const {
  return {std::vector<FieldElement>(rs().count(), field_.zero())};
}

UnipotentElement UnipotentGroup::element(std::vector<FieldElement> coords) const {
  if (int(coords.size()) != rs().count())
    fail(Errc::SpecMismatch, "coordinate count does not match the root system");
  for (const auto& c : coords) field_.check(c);
  return {std::move(coords)};
}

bool UnipotentGroup::is_identity(const UnipotentElement& x) const {
  for (const auto& c : x.coords)
    if (!field_.is_zero(c)) return false;
  return true;
}

RootFactor UnipotentGroup::merge_one_parameter(const RootFactor& f, const RootFactor& g) const {
  if (f.root_index != g.root_index)
    fail(Errc::SpecMismatch, "one-parameter merge needs a single root");
  return {f.root_index, field_.add(f.scalar, g.scalar)};
}

std::vector<RootFactor> UnipotentGroup::commutator_tail(int a, int b, const FieldElement& t,
                                                        const FieldElement& u) const {
  std::vector<RootFactor> out;
  for (const TailTerm& term : sc_.tail(a, b)) {
    FieldElement s = field_.from_int((term.i + term.j) % 2 == 0 ? term.c : -term.c);
    for (int k = 0; k < term.i; ++k) s = field_.mul(s, t);
    for (int k = 0; k < term.j; ++k) s = field_.mul(s, u);
    if (!field_.is_zero(s)) out.push_back({term.root_index, s});
  }
  return out;
}

UnipotentElement UnipotentGroup::collect(std::vector<RootFactor> factors) const {
  const int N = rs().count();
  for (const RootFactor& f : factors) {
    if (f.root_index < 1 || f.root_index > N)
      fail(Errc::NonPositiveRoot, "factor root index out of range");
    field_.check(f.scalar);
  }
  std::list<RootFactor> word(factors.begin(), factors.end());

  // Move the leftmost out-of-order factor rightward with the commutator
  // relation, merging equal roots and dropping zero scalars as they appear.
  // The created tail factors have strictly greater height, so the multiset of
  // heights decreases and the rewriting terminates.
  auto it = word.begin();
  while (it != word.end()) {
    if (field_.is_zero(it->scalar)) {
      it = word.erase(it);
      if (it != word.begin()) --it;
      continue;
    }
    auto next = std::next(it);
    if (next == word.end()) break;
    if (field_.is_zero(next->scalar)) {
      word.erase(next);
      continue;
    }
    if (it->root_index == next->root_index) {
      it->scalar = field_.add(it->scalar, next->scalar);
      word.erase(next);
      continue;
    }
    if (it->root_index > next->root_index) {
      // x_a(t) x_b(u) = x_b(u) x_a(t) * tail(a, b)
      auto tail = commutator_tail(it->root_index, next->root_index, it->scalar, next->scalar);
      std::swap(*it, *next);
      word.insert(std::next(next), tail.begin(), tail.end());
      if (it != word.begin()) --it;
      continue;
    }
    ++it;
  }

  UnipotentElement out = identity();
  for (const RootFactor& f : word) out.coords[f.root_index - 1] = f.scalar;
  return out;
}

std::vector<RootFactor> UnipotentGroup::factors_of(const UnipotentElement& x) const {
  std::vector<RootFactor> fs;
  for (int i = 1; i <= rs().count(); ++i)
    if (!field_.is_zero(x.coords[i - 1])) fs.push_back({i, x.coords[i - 1]});
  return fs;
}

UnipotentElement UnipotentGroup::multiply(const UnipotentElement& x,
                                          const UnipotentElement& y) const {
  auto fs = factors_of(x);
  auto gs = factors_of(y);
  fs.insert(fs.end(), gs.begin(), gs.end());
  return collect(std::move(fs));
}

UnipotentElement UnipotentGroup::invert(const UnipotentElement& x) const {
  auto fs = factors_of(x);
  std::reverse(fs.begin(), fs.end());
  for (RootFactor& f : fs) f.scalar = field_.neg(f.scalar);
  return collect(std::move(fs));
}

UnipotentElement UnipotentGroup::conjugate(const UnipotentElement& g,
                                           const UnipotentElement& x) const {
  return multiply(multiply(g, x), invert(g));
}

TorusElement UnipotentGroup::torus_element(std::vector<FieldElement> coords) const {
  if (int(coords.size()) != rs().rank()) fail(Errc::SpecMismatch, "torus coordinate count");
  for (const auto& c : coords) {
    field_.check(c);
    if (field_.is_zero(c)) fail(Errc::ZeroTorusCoordinate, "torus coordinates must be nonzero");
  }
  return {std::move(coords)};
}

TorusElement UnipotentGroup::torus_identity() const {
  return {std::vector<FieldElement>(rs().rank(), field_.one())};
}

TorusElement UnipotentGroup::torus_multiply(const TorusElement& a, const TorusElement& b) const {
  std::vector<FieldElement> c;
  for (int i = 0; i < rs().rank(); ++i) c.push_back(field_.mul(a.coords[i], b.coords[i]));
  return {std::move(c)};
}

TorusElement UnipotentGroup::torus_invert(const TorusElement& h) const {
  std::vector<FieldElement> c;
  for (const auto& v : h.coords) c.push_back(field_.inv(v));
  return {std::move(c)};
}

UnipotentElement UnipotentGroup::torus_conjugate(const TorusElement& h,
                                                 const UnipotentElement& x) const {
  if (int(h.coords.size()) != rs().rank()) fail(Errc::SpecMismatch, "torus coordinate count");
  for (const auto& v : h.coords)
    if (field_.is_zero(v)) fail(Errc::ZeroTorusCoordinate, "torus coordinates must be nonzero");
  UnipotentElement out = x;
  for (int j = 1; j <= rs().count(); ++j) {
    if (field_.is_zero(out.coords[j - 1])) continue;
    FieldElement scale = field_.one();
    for (int i = 1; i <= rs().rank(); ++i) {
      int e = rs().pairing(rs().root(j), rs().root(i));
      if (e != 0) scale = field_.mul(scale, field_.pow(h.coords[i - 1], BigInt(e)));
    }
    out.coords[j - 1] = field_.mul(scale, out.coords[j - 1]);
  }
  return out;
}

BorelElement UnipotentGroup::borel_multiply(const BorelElement& a, const BorelElement& b) const {
  return {torus_multiply(a.h, b.h),
          multiply(torus_conjugate(torus_invert(b.h), a.u), b.u)};
}

BorelElement UnipotentGroup::borel_invert(const BorelElement& a) const {
  return {torus_invert(a.h), invert(torus_conjugate(a.h, a.u))};
}

std::vector<std::vector<FieldElement>> UnipotentGroup::matrix_representation(
    const UnipotentElement& x) const {
  if (rs().type().family != 'A') fail(Errc::WrongType, "matrix representation is for type A");
  const int n = rs().rank() + 1;
  std::vector<std::vector<FieldElement>> m(n, std::vector<FieldElement>(n, field_.zero()));
  for (int i = 0; i < n; ++i) m[i][i] = field_.one();
  // root alpha_a + ... + alpha_b corresponds to the unit E_{a, b+1}
  for (int idx = 1; idx <= rs().count(); ++idx) {
    const FieldElement& t = x.coords[idx - 1];
    if (field_.is_zero(t)) continue;
    const Root& r = rs().root(idx);
    int a = -1, b = -1;
    for (int i = 0; i < rs().rank(); ++i)
      if (r.coeffs[i] != 0) {
        if (a < 0) a = i;
        b = i;
      }
    // multiply on the right by I + t E_{a, b+1}: column b+1 += t * column a
    for (int row = 0; row < n; ++row)
      m[row][b + 1] = field_.add(m[row][b + 1], field_.mul(m[row][a], t));
  }
  return m;
}

std::uint64_t UnipotentGroup::element_count() const {
  if (!field_.finite()) fail(Errc::WrongType, "enumeration needs a finite field");
  std::uint64_t q = field_.order(), n = 1;
  for (int i = 0; i < rs().count(); ++i) {
    if (n > (1ull << 62) / q) fail(Errc::TooLarge, "element space too large to enumerate");
    n *= q;
  }
  return n;
}

UnipotentElement UnipotentGroup::element_at(std::uint64_t index) const {
  std::uint64_t q = field_.order();
  UnipotentElement x = identity();
  for (int i = 0; i < rs().count(); ++i) {
    x.coords[i] = field_.element_at(index % q);
    index /= q;
  }
  return x;
}

std::uint64_t UnipotentGroup::index_of(const UnipotentElement& x) const {
  std::uint64_t q = field_.order(), idx = 0;
  for (int i = rs().count(); i-- > 0;) idx = idx * q + field_.index_of(x.coords[i]);
  return idx;
}

UnipotentElement UnipotentGroup::sample(std::mt19937_64& rng) const {
  UnipotentElement x = identity();
  for (auto& c : x.coords) c = field_.sample(rng);
  return x;
}

std::string UnipotentGroup::format(const UnipotentElement& x) const {
  std::string s;
  for (int i = 1; i <= rs().count(); ++i) {
    if (field_.is_zero(x.coords[i - 1])) continue;
    if (!s.empty()) s += '*';
    s += "x[" + std::to_string(i) + "](" + field_.format(x.coords[i - 1]) + ")";
  }
  return s.empty() ? "e" : s;
}

UnipotentElement UnipotentGroup::parse(const std::string& text) const {
  if (text == "e" || text.empty()) return identity();
  std::vector<RootFactor> fs;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == '*') { ++pos; continue; }
    if (text.compare(pos, 2, "x[") != 0) fail(Errc::ValidationError, "bad element text: " + text);
    std::size_t close = text.find("](", pos);
    if (close == std::string::npos) fail(Errc::ValidationError, "bad element text: " + text);
    int idx = std::stoi(text.substr(pos + 2, close - pos - 2));
    std::size_t endp = text.find(')', close);
    if (endp == std::string::npos) fail(Errc::ValidationError, "bad element text: " + text);
    FieldElement sc = field_.parse_element(text.substr(close + 2, endp - close - 2));
    if (idx < 1 || idx > rs().count()) fail(Errc::NonPositiveRoot, "root index out of range");
    fs.push_back({idx, sc});
    pos = endp + 1;
  }
  return collect(std::move(fs));
}

}  // namespace twist
