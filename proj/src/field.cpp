/* Copyright 2026 The trichar Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "trichar/field.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "trichar/error.hpp"

namespace trichar {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<unsigned, unsigned>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  unsigned h = 0;
  while (q % p == 0) {
    q /= p;
    ++h;
  }
  if (q != 1) return std::nullopt;
  return std::pair{static_cast<unsigned>(p), h};
}

namespace {

using Poly = std::vector<unsigned>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

unsigned inverse_mod(unsigned a, unsigned p) {
  // p is prime and small; Fermat.
  unsigned result = 1;
  unsigned base = a % p;
  unsigned e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

// Remainder of f modulo g over GF(p); g nonzero.
Poly poly_mod(Poly f, const Poly& g, unsigned p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  const unsigned lead_inv = inverse_mod(g.back(), p);
  while (f.size() >= g.size()) {
    const unsigned factor = f.back() * lead_inv % p;
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = (f[shift + i] + p - factor * g[i] % p) % p;
    }
    trim(f);
  }
  return f;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& m, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
  }
  return poly_mod(std::move(prod), m, p);
}

Poly digits(std::uint64_t code, unsigned p, unsigned k) {
  Poly c(k, 0);
  for (unsigned i = 0; i < k; ++i) {
    c[i] = static_cast<unsigned>(code % p);
    code /= p;
  }
  return c;
}

std::uint64_t encode(const Poly& c, unsigned p) {
  std::uint64_t code = 0;
  for (std::size_t i = c.size(); i-- > 0;) code = code * p + c[i];
  return code;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

bool is_irreducible(unsigned p, std::span<const unsigned> poly) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const unsigned deg = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; 2 * d <= deg; ++d) {
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t low = 0; low < count; ++low) {
      Poly g = digits(low, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::uint64_t FieldDescriptor::order() const { return ipow(p, k); }

FieldDescriptor FieldDescriptor::canonical(unsigned p, unsigned k) {
  if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  if (k == 0) throw FieldError("extension degree must be positive");
  const std::uint64_t count = ipow(p, k);
  for (std::uint64_t low = 0; low < count; ++low) {
    Poly f = digits(low, p, k);
    f.push_back(1);
    if (is_irreducible(p, f)) return FieldDescriptor{p, k, std::move(f)};
  }
  throw FieldError("no irreducible polynomial found");  // unreachable
}

FieldDescriptor FieldDescriptor::with_modulus(unsigned p, std::vector<unsigned> modulus) {
  if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  if (modulus.size() < 2) throw FieldError("modulus must have degree at least 1");
  for (unsigned c : modulus) {
    if (c >= p) throw FieldError("modulus coefficient " + std::to_string(c) + " not reduced mod p");
  }
  if (modulus.back() != 1) throw FieldError("modulus must be monic");
  if (!is_irreducible(p, modulus)) throw FieldError("modulus is reducible over GF(p)");
  const unsigned k = static_cast<unsigned>(modulus.size() - 1);
  return FieldDescriptor{p, k, std::move(modulus)};
}

std::string FieldDescriptor::to_string() const {
  std::ostringstream os;
  os << p << '^' << k << '/';
  for (std::size_t i = 0; i < modulus.size(); ++i) os << (i ? "," : "") << modulus[i];
  return os.str();
}

namespace {

unsigned parse_unsigned(std::string_view s, const std::string& context) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw FieldError("malformed field spec '" + context + "'");
  }
  return v;
}

}  // namespace

FieldDescriptor FieldDescriptor::parse(const std::string& spec) {
  const auto caret = spec.find('^');
  if (caret == std::string::npos) throw FieldError("malformed field spec '" + spec + "'");
  const auto slash = spec.find('/', caret);
  const std::string_view view(spec);
  const unsigned p = parse_unsigned(view.substr(0, caret), spec);
  const unsigned k = parse_unsigned(
      view.substr(caret + 1, slash == std::string::npos ? std::string::npos : slash - caret - 1),
      spec);
  if (slash == std::string::npos) return canonical(p, k);
  std::vector<unsigned> coeffs;
  std::string_view rest = view.substr(slash + 1);
  while (true) {
    const auto comma = rest.find(',');
    coeffs.push_back(parse_unsigned(rest.substr(0, comma), spec));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (coeffs.size() != k + 1) {
    throw FieldError("field spec '" + spec + "' needs " + std::to_string(k + 1) + " coefficients");
  }
  return with_modulus(p, std::move(coeffs));
}

Field::Field(FieldDescriptor desc) : desc_(std::move(desc)) {
  const std::uint64_t order = desc_.order();
  if (order > kMaxOrder) {
    throw FieldError("field of order " + std::to_string(order) + " exceeds the table limit of " +
                     std::to_string(kMaxOrder));
  }
  order_ = static_cast<std::uint32_t>(order);
  const unsigned p = desc_.p;
  const unsigned k = desc_.k;
  const std::size_t n = order_;

  std::vector<Poly> polys(n);
  for (std::size_t x = 0; x < n; ++x) polys[x] = digits(x, p, k);

  add_.resize(n * n);
  mul_.resize(n * n);
  neg_.resize(n);
  inv_.assign(n, 0);
  frob_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    Poly negx(k);
    for (unsigned i = 0; i < k; ++i) negx[i] = (p - polys[x][i]) % p;
    neg_[x] = static_cast<std::uint16_t>(encode(negx, p));
    for (std::size_t y = 0; y < n; ++y) {
      Poly sum(k);
      for (unsigned i = 0; i < k; ++i) sum[i] = (polys[x][i] + polys[y][i]) % p;
      add_[x * n + y] = static_cast<std::uint16_t>(encode(sum, p));
      if (y < x) {
        mul_[x * n + y] = mul_[y * n + x];
        continue;
      }
      Poly a = polys[x], b = polys[y];
      trim(a);
      trim(b);
      Poly prod = poly_mul_mod(a, b, desc_.modulus, p);
      prod.resize(k, 0);
      mul_[x * n + y] = static_cast<std::uint16_t>(encode(prod, p));
    }
  }
  for (std::size_t x = 1; x < n; ++x) {
    for (std::size_t y = 1; y < n; ++y) {
      if (mul_[x * n + y] == 1) {
        inv_[x] = static_cast<std::uint16_t>(y);
        break;
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    frob_[x] = pow(Elem{static_cast<std::uint32_t>(x)}, p).code;
  }
}

Elem Field::element(std::uint64_t code) const {
  if (code >= order_) {
    throw FieldError("encoding " + std::to_string(code) + " outside GF(" + std::to_string(order_) +
                     ")");
  }
  return Elem{static_cast<std::uint32_t>(code)};
}

Elem Field::constant(std::int64_t c) const {
  const std::int64_t p = desc_.p;
  return Elem{static_cast<std::uint32_t>(((c % p) + p) % p)};
}

Elem Field::from_coefficients(std::span<const unsigned> coeffs) const {
  if (coeffs.size() != desc_.k) throw FieldError("wrong number of coefficients");
  for (unsigned c : coeffs) {
    if (c >= desc_.p) throw FieldError("coefficient not reduced mod p");
  }
  return Elem{static_cast<std::uint32_t>(encode(Poly(coeffs.begin(), coeffs.end()), desc_.p))};
}

std::vector<unsigned> Field::coefficients(Elem x) const { return digits(x.code, desc_.p, desc_.k); }

Elem Field::inv(Elem x) const {
  if (x.code == 0) throw FieldError("inverse of zero");
  return Elem{inv_[x.code]};
}

Elem Field::pow(Elem x, std::uint64_t e) const {
  Elem result = kOne;
  Elem base = x;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

const Field& FieldElement::same_field(const FieldElement& o) const {
  if (field_ != o.field_ && field_->descriptor() != o.field_->descriptor()) {
    throw FieldError("operands belong to different fields");
  }
  return *field_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  return {same_field(o), field_->add(value_, o.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  return {same_field(o), field_->sub(value_, o.value_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  return {same_field(o), field_->mul(value_, o.value_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  return {same_field(o), field_->div(value_, o.value_)};
}
bool FieldElement::operator==(const FieldElement& o) const {
  return same_field(o).descriptor() == o.field_->descriptor() && value_ == o.value_;
}

// ---------------------------------------------------------------------------

std::shared_ptr<const FieldTower> FieldTower::make(unsigned p, unsigned h,
                                                   std::optional<std::vector<unsigned>> modulus) {
  if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  if (h == 0) throw FieldError("subfield degree must be positive");
  FieldDescriptor big = modulus ? FieldDescriptor::with_modulus(p, std::move(*modulus))
                                : FieldDescriptor::canonical(p, 2 * h);
  if (big.k != 2 * h) {
    throw FieldError("modulus has degree " + std::to_string(big.k) + ", expected " +
                     std::to_string(2 * h));
  }
  return std::shared_ptr<const FieldTower>(new FieldTower(std::move(big), h));
}

std::shared_ptr<const FieldTower> FieldTower::from_descriptor(FieldDescriptor big) {
  if (big.k % 2 != 0) throw FieldError("GF(q^2) needs an even extension degree");
  const unsigned h = big.k / 2;
  return std::shared_ptr<const FieldTower>(new FieldTower(std::move(big), h));
}

std::shared_ptr<const FieldTower> FieldTower::for_q(std::uint64_t q) {
  const auto ph = prime_power(q);
  if (!ph) throw FieldError(std::to_string(q) + " is not a prime power");
  return make(ph->first, ph->second);
}

FieldTower::FieldTower(FieldDescriptor big, unsigned h) : field_(std::move(big)), h_(h) {
  q_ = ipow(field_.characteristic(), h_);
  const std::uint32_t n = field_.order();

  conj_.resize(n);
  subfield_index_.assign(n, -1);
  for (std::uint32_t x = 0; x < n; ++x) {
    Elem y{x};
    for (unsigned i = 0; i < h_; ++i) y = field_.frobenius(y);
    conj_[x] = static_cast<std::uint16_t>(y.code);
    if (y.code == x) {
      subfield_index_[x] = static_cast<int>(subfield_.size());
      subfield_.push_back(Elem{x});
    }
  }

  if (q_odd()) {
    for (std::uint32_t x = 1; x < n; ++x) {
      if (conj(Elem{x}) == field_.neg(Elem{x})) {
        eps_ = Elem{x};
        break;
      }
    }
  } else {
    for (std::uint32_t x = 0; x < n; ++x) {
      const Elem e{x};
      if (in_subfield(e)) continue;
      const Elem v = field_.add(field_.mul(e, e), e);
      if (in_subfield(v) && v != kOne && absolute_trace(v) == kOne) {
        eps_ = e;
        nu_ = v;
        break;
      }
    }
  }

  if (eps_) {
    decomposition_.resize(n);
    for (Elem x0 : subfield_) {
      for (Elem x1 : subfield_) {
        decomposition_[recompose(x0, x1).code] = {x0, x1};
      }
    }
  }
}

std::size_t FieldTower::subfield_index(Elem x) const {
  const int i = subfield_index_.at(x.code);
  if (i < 0) throw FieldError("element " + std::to_string(x.code) + " is not in GF(q)");
  return static_cast<std::size_t>(i);
}

Elem FieldTower::absolute_trace(Elem x) const {
  if (!field_.contains(x) || !in_subfield(x)) {
    throw FieldError("absolute trace is defined on GF(q) only");
  }
  Elem sum = kZero;
  Elem y = x;
  for (unsigned i = 0; i < h_; ++i) {
    sum = field_.add(sum, y);
    y = field_.frobenius(y);
  }
  return sum;
}

bool FieldTower::is_square_in_subfield(Elem x) const {
  if (!q_odd()) throw FieldError("squareness test is rejected for even q");
  if (!field_.contains(x) || !in_subfield(x)) throw FieldError("element is not in GF(q)");
  if (x == kZero) return true;
  return field_.pow(x, (q_ - 1) / 2) == kOne;
}

std::pair<Elem, Elem> FieldTower::decompose(Elem x) const {
  if (!eps_) throw ParamError("GF(" + std::to_string(q2()) + ") has no epsilon basis over GF(q)");
  if (!field_.contains(x)) throw FieldError("element outside the field");
  return decomposition_[x.code];
}

Elem FieldTower::recompose(Elem x0, Elem x1) const {
  if (!eps_) throw ParamError("GF(" + std::to_string(q2()) + ") has no epsilon basis over GF(q)");
  return field_.add(x0, field_.mul(*eps_, x1));
}

}  // namespace trichar
