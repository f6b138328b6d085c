#include "crys/groupcore.hpp"

#include <numeric>
#include <sstream>

namespace crys {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

PGroup PGroup::cyclic(long p, long s) {
  if (!is_prime(p)) throw std::invalid_argument("PGroup: p must be prime");
  if (s < 1) throw std::invalid_argument("PGroup: s must be >= 1");
  long order = 1;
  for (long k = 0; k < s; ++k) order *= p;
  return PGroup(GroupKind::Cyclic, p, s, order);
}

PGroup PGroup::klein(long p) {
  if (!is_prime(p)) throw std::invalid_argument("PGroup: p must be prime");
  return PGroup(GroupKind::Klein, p, 1, p * p);
}

std::string PGroup::descriptor() const {
  std::ostringstream os;
  if (kind_ == GroupKind::Cyclic)
    os << "Cyclic(p=" << p_ << ",s=" << s_ << ")";
  else
    os << "Klein(p=" << p_ << ")";
  return os.str();
}

static long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

bool is_identity(const PGroup& G, const GroupElement& g) {
  (void)G;
  return g.i == 0 && g.j == 0;
}

GroupElement identity_element() { return GroupElement{0, 0}; }

GroupElement element(const PGroup& G, long i, long j) {
  if (G.kind() == GroupKind::Cyclic) {
    if (j != 0) throw std::invalid_argument("element: cyclic group has one generator");
    return GroupElement{mod(i, G.order()), 0};
  }
  return GroupElement{mod(i, G.p()), mod(j, G.p())};
}

GroupElement multiply_elements(const PGroup& G, const GroupElement& g, const GroupElement& h) {
  return element(G, g.i + h.i, g.j + h.j);
}

GroupElement inverse_element(const PGroup& G, const GroupElement& g) {
  return element(G, -g.i, -g.j);
}

GroupElement power_element(const PGroup& G, const GroupElement& g, long k) {
  return element(G, g.i * k, g.j * k);
}

long element_order(const PGroup& G, const GroupElement& g) {
  if (is_identity(G, g)) return 1;
  if (G.kind() == GroupKind::Klein) return G.p();
  return G.order() / std::gcd(G.order(), g.i);
}

long element_index(const PGroup& G, const GroupElement& g) {
  if (G.kind() == GroupKind::Cyclic) return g.i;
  return g.i * G.p() + g.j;
}

GroupElement element_at(const PGroup& G, long index) {
  if (index < 0 || index >= G.order()) throw std::invalid_argument("element_at: index out of range");
  if (G.kind() == GroupKind::Cyclic) return GroupElement{index, 0};
  return GroupElement{index / G.p(), index % G.p()};
}

std::vector<GroupElement> all_elements(const PGroup& G) {
  std::vector<GroupElement> v;
  v.reserve(G.order());
  for (long k = 0; k < G.order(); ++k) v.push_back(element_at(G, k));
  return v;
}

GroupRingElement::GroupRingElement(const PGroup& G, std::vector<Int> coeffs)
    : group_(G), c_(std::move(coeffs)) {
  if (long(c_.size()) != G.order()) throw std::invalid_argument("GroupRingElement: coefficient count mismatch");
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
  if (group_ != o.group_) throw std::invalid_argument("group ring add: group mismatch");
  GroupRingElement r(group_);
  for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = c_[k] + o.c_[k];
  return r;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const {
  if (group_ != o.group_) throw std::invalid_argument("group ring sub: group mismatch");
  GroupRingElement r(group_);
  for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = c_[k] - o.c_[k];
  return r;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
  if (group_ != o.group_) throw std::invalid_argument("group ring mul: group mismatch");
  GroupRingElement r(group_);
  for (long x = 0; x < group_.order(); ++x) {
    if (c_[x] == 0) continue;
    GroupElement gx = element_at(group_, x);
    for (long y = 0; y < group_.order(); ++y) {
      if (o.c_[y] == 0) continue;
      GroupElement gz = multiply_elements(group_, gx, element_at(group_, y));
      r.c_[element_index(group_, gz)] += c_[x] * o.c_[y];
    }
  }
  return r;
}

GroupRingElement GroupRingElement::operator*(const Int& k) const {
  GroupRingElement r(group_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * k;
  return r;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement r(group_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
  return r;
}

bool GroupRingElement::operator==(const GroupRingElement& o) const {
  return group_ == o.group_ && c_ == o.c_;
}

bool GroupRingElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Int& x) { return x == 0; });
}

GroupRingElement GroupRingElement::pow(unsigned long k) const {
  GroupRingElement r = ring_unit(group_);
  GroupRingElement b = *this;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

IntMatrix GroupRingElement::multiplication_matrix() const {
  const long n = group_.order();
  IntMatrix M{int(n), int(n)};
  for (long x = 0; x < n; ++x) {
    if (c_[x] == 0) continue;
    GroupElement gx = element_at(group_, x);
    for (long y = 0; y < n; ++y) {
      GroupElement gz = multiply_elements(group_, gx, element_at(group_, y));
      M.at(int(element_index(group_, gz)), int(y)) += c_[x];
    }
  }
  return M;
}

GroupRingElement ring_unit(const PGroup& G) {
  GroupRingElement r(G);
  r.coeff(identity_element()) = 1;
  return r;
}

GroupRingElement ring_element(const PGroup& G, const GroupElement& g) {
  GroupRingElement r(G);
  r.coeff(g) = 1;
  return r;
}

GroupRingElement phi_element(const PGroup& G, const GroupElement& base) {
  if (is_identity(G, base)) throw std::invalid_argument("phi_element: base must be nontrivial");
  GroupRingElement r(G);
  for (long k = 0; k < G.p(); ++k) r.coeff(power_element(G, base, k)) += 1;
  return r;
}

GroupRingElement norm_element(const PGroup& G, const GroupElement& g) {
  GroupRingElement r(G);
  long n = element_order(G, g);
  for (long k = 0; k < n; ++k) r.coeff(power_element(G, g, k)) += 1;
  return r;
}

GroupElement GroupAutomorphism::apply(const GroupElement& g) const {
  if (group.kind() == GroupKind::Cyclic) return element(group, g.i * image_a.i);
  // a^i b^j -> image_a^i image_b^j
  return element(group, image_a.i * g.i + image_b.i * g.j, image_a.j * g.i + image_b.j * g.j);
}

bool GroupAutomorphism::is_identity() const {
  if (group.kind() == GroupKind::Cyclic) return image_a.i == 1;
  return image_a == GroupElement{1, 0} && image_b == GroupElement{0, 1};
}

GroupAutomorphism GroupAutomorphism::compose(const GroupAutomorphism& inner) const {
  if (group != inner.group) throw std::invalid_argument("compose: group mismatch");
  return GroupAutomorphism{group, apply(inner.image_a), apply(inner.image_b)};
}

GroupAutomorphism GroupAutomorphism::inverse() const {
  for (const auto& e : automorphisms(group))
    if (compose(e).is_identity()) return e;
  throw std::logic_error("GroupAutomorphism::inverse: no inverse found");
}

std::vector<GroupAutomorphism> automorphisms(const PGroup& G) {
  std::vector<GroupAutomorphism> out;
  if (G.kind() == GroupKind::Cyclic) {
    for (long t = 1; t < G.order(); ++t)
      if (t % G.p() != 0)
        out.push_back(GroupAutomorphism{G, element(G, t), identity_element()});
  } else {
    const long p = G.p();
    for (long a00 = 0; a00 < p; ++a00)
      for (long a01 = 0; a01 < p; ++a01)
        for (long a10 = 0; a10 < p; ++a10)
          for (long a11 = 0; a11 < p; ++a11)
            if (mod(a00 * a11 - a01 * a10, p) != 0)
              out.push_back(GroupAutomorphism{G, element(G, a00, a10), element(G, a01, a11)});
  }
  return out;
}

std::vector<GroupAutomorphism> automorphism_generators(const PGroup& G) {
  auto all = automorphisms(G);
  // greedy closure: add automorphisms until the generated subgroup is Aut(G)
  std::vector<GroupAutomorphism> gens;
  std::vector<GroupAutomorphism> closure{GroupAutomorphism{
      G, element(G, 1, 0), G.kind() == GroupKind::Klein ? element(G, 0, 1) : identity_element()}};
  auto contains = [&](const GroupAutomorphism& e) {
    return std::find(closure.begin(), closure.end(), e) != closure.end();
  };
  for (const auto& cand : all) {
    if (closure.size() == all.size()) break;
    if (contains(cand)) continue;
    gens.push_back(cand);
    // regenerate the closure
    bool grew = true;
    closure.push_back(cand);
    while (grew) {
      grew = false;
      for (size_t i = 0; i < closure.size(); ++i)
        for (size_t j = 0; j < closure.size(); ++j) {
          auto c = closure[i].compose(closure[j]);
          if (!contains(c)) { closure.push_back(c); grew = true; }
        }
    }
  }
  return gens;
}

}  // namespace crys
