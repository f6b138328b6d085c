#pragma once
// Finite p-groups C_{p^s} and C_p x C_p, their elements, automorphisms and
// integral group-ring arithmetic.

#include "crys/exactlin.hpp"

#include <vector>

namespace crys {

enum class GroupKind { Cyclic, Klein };

// C_{p^s} = <a> or C_p x C_p = <a> x <b>.  Elements are exponent tuples;
// the dense coefficient order for group-ring vectors is lexicographic in the
// exponents (cyclic: a^i at index i; klein: a^i b^j at index i*p + j).
class PGroup {
public:
  static PGroup cyclic(long p, long s);
  static PGroup klein(long p);

  GroupKind kind() const { return kind_; }
  long p() const { return p_; }
  long s() const { return s_; }
  long order() const { return order_; }
  long exponent() const { return kind_ == GroupKind::Cyclic ? order_ : p_; }
  int num_generators() const { return kind_ == GroupKind::Cyclic ? 1 : 2; }

  bool operator==(const PGroup& o) const = default;
  std::string descriptor() const;  // "Cyclic(p=3,s=2)" / "Klein(p=2)"

private:
  PGroup(GroupKind k, long p, long s, long order) : kind_(k), p_(p), s_(s), order_(order) {}
  GroupKind kind_;
  long p_, s_, order_;
};

struct GroupElement {
  long i = 0, j = 0;  // a^i (cyclic) or a^i b^j (klein); j unused for cyclic
  bool operator==(const GroupElement& o) const = default;
};

bool is_identity(const PGroup& G, const GroupElement& g);
GroupElement identity_element();
GroupElement element(const PGroup& G, long i, long j = 0);
GroupElement multiply_elements(const PGroup& G, const GroupElement& g, const GroupElement& h);
GroupElement inverse_element(const PGroup& G, const GroupElement& g);
GroupElement power_element(const PGroup& G, const GroupElement& g, long k);
long element_order(const PGroup& G, const GroupElement& g);
long element_index(const PGroup& G, const GroupElement& g);
GroupElement element_at(const PGroup& G, long index);
std::vector<GroupElement> all_elements(const PGroup& G);

// Dense integer group-ring element, coefficients in element-index order.
class GroupRingElement {
public:
  explicit GroupRingElement(const PGroup& G) : group_(G), c_(G.order()) {}
  GroupRingElement(const PGroup& G, std::vector<Int> coeffs);

  const PGroup& group() const { return group_; }
  Int& coeff(const GroupElement& g) { return c_[element_index(group_, g)]; }
  const Int& coeff(const GroupElement& g) const { return c_[element_index(group_, g)]; }
  const std::vector<Int>& coeffs() const { return c_; }

  GroupRingElement operator+(const GroupRingElement& o) const;
  GroupRingElement operator-(const GroupRingElement& o) const;
  GroupRingElement operator*(const GroupRingElement& o) const;
  GroupRingElement operator*(const Int& k) const;
  GroupRingElement operator-() const;
  bool operator==(const GroupRingElement& o) const;
  bool is_zero() const;

  GroupRingElement pow(unsigned long k) const;

  // Matrix of left multiplication by this element on the group ring, in the
  // dense coefficient basis (columns are images of basis elements).
  IntMatrix multiplication_matrix() const;

private:
  PGroup group_;
  std::vector<Int> c_;
};

GroupRingElement ring_unit(const PGroup& G);                       // 1
GroupRingElement ring_element(const PGroup& G, const GroupElement& g);
// Phi(base) = 1 + base + ... + base^{p-1}; base must be nontrivial.
GroupRingElement phi_element(const PGroup& G, const GroupElement& base);
// N_g = 1 + g + ... + g^{ord(g)-1}.
GroupRingElement norm_element(const PGroup& G, const GroupElement& g);

// Automorphism as generator images.  Cyclic: a -> a^t, gcd(t, p) = 1.
// Klein: (a, b) -> (a^m00 b^m10, a^m01 b^m11), matrix invertible mod p.
struct GroupAutomorphism {
  PGroup group;
  GroupElement image_a;
  GroupElement image_b;  // meaningful for klein only

  GroupElement apply(const GroupElement& g) const;
  GroupAutomorphism inverse() const;
  GroupAutomorphism compose(const GroupAutomorphism& inner) const;  // this after inner
  bool is_identity() const;
  bool operator==(const GroupAutomorphism& o) const = default;
};

std::vector<GroupAutomorphism> automorphisms(const PGroup& G);
// A small generating set of Aut(G); orbit closures under these reach the
// whole automorphism group.
std::vector<GroupAutomorphism> automorphism_generators(const PGroup& G);

bool is_prime(long p);

}  // namespace crys
