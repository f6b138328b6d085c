#include "crys/descriptor.hpp"

#include <cctype>

namespace crys {

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

void expect_keys(const Descriptor& d, const std::vector<std::string>& keys) {
  if (d.args.size() != keys.size())
    throw DescriptorError(d.name + ": expected arguments " + [&] {
      std::string s;
      for (const auto& k : keys) s += (s.empty() ? "" : ",") + k;
      return s;
    }());
  for (const auto& k : keys)
    if (!d.args.count(k)) throw DescriptorError(d.name + ": missing argument " + k);
}

long prime_arg(const Descriptor& d) {
  long p = d.arg("p");
  if (!is_prime(p)) throw DescriptorError(d.name + ": p=" + std::to_string(p) + " is not prime");
  return p;
}

}  // namespace

long Descriptor::arg(const std::string& key) const {
  auto it = args.find(key);
  if (it == args.end()) throw DescriptorError(name + ": missing argument " + key);
  return it->second;
}

Descriptor parse_descriptor(const std::string& text) {
  Descriptor d;
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(unsigned(text[i]))) ++i; };
  skip_ws();
  while (i < text.size() && (std::isalnum(unsigned(text[i])))) d.name += text[i++];
  if (d.name.empty()) throw DescriptorError("descriptor: empty name");
  skip_ws();
  if (i < text.size()) {
    if (text[i] != '(') throw DescriptorError("descriptor: expected '(' after name");
    ++i;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      std::string key;
      while (i < text.size() && std::isalpha(unsigned(text[i]))) key += text[i++];
      skip_ws();
      if (key.empty() || i >= text.size() || text[i] != '=')
        throw DescriptorError("descriptor: expected key=value");
      ++i;
      skip_ws();
      std::string num;
      if (i < text.size() && text[i] == '-') num += text[i++];
      while (i < text.size() && std::isdigit(unsigned(text[i]))) num += text[i++];
      if (num.empty() || num == "-") throw DescriptorError("descriptor: expected integer value");
      if (d.args.count(key)) throw DescriptorError("descriptor: duplicate key " + key);
      d.args[key] = std::stol(num);
      skip_ws();
      if (i < text.size() && text[i] == ',') { ++i; skip_ws(); }
      else if (i < text.size() && text[i] != ')')
        throw DescriptorError("descriptor: expected ',' or ')'");
    }
    if (i >= text.size() || text[i] != ')') throw DescriptorError("descriptor: unterminated argument list");
    ++i;
    skip_ws();
  }
  if (i != text.size()) throw DescriptorError("descriptor: trailing characters");
  return d;
}

CatalogEntry build_entry(const std::string& descriptor) {
  Descriptor d = parse_descriptor(descriptor);
  try {
    if (d.name == "Xi") {
      expect_keys(d, {"p", "i"});
      return xi_module(prime_arg(d), d.arg("i"));
    }
    if (d.name == "Yi") {
      expect_keys(d, {"p", "i"});
      return yi_module(prime_arg(d), d.arg("i"));
    }
    if (d.name == "Y0") {
      expect_keys(d, {"p"});
      return yi_module(prime_arg(d), 0);
    }
    if (d.name == "Uj") {
      expect_keys(d, {"p", "j"});
      return uj_module(prime_arg(d), d.arg("j"));
    }
    if (d.name == "U0") {
      expect_keys(d, {"p"});
      return u0_module(prime_arg(d));
    }
    if (d.name == "Lemma12") {
      expect_keys(d, {"p"});
      return lemma12_module(prime_arg(d));
    }
    if (d.name == "Thm1") {
      expect_keys(d, {"p", "s", "n"});
      return theorem1_module(prime_arg(d), d.arg("s"), d.arg("n"));
    }
    if (d.name == "DeltaN") {
      expect_keys(d, {"n"});
      return klein_rep(KleinKind::DeltaN, d.arg("n"));
    }
    if (d.name == "DeltaNStar") {
      expect_keys(d, {"n"});
      return klein_rep(KleinKind::DeltaNStar, d.arg("n"));
    }
    if (d.name == "WN") {
      expect_keys(d, {"n"});
      return klein_rep(KleinKind::WN, d.arg("n"));
    }
    if (d.name == "WNStar") {
      expect_keys(d, {"n"});
      return klein_rep(KleinKind::WNStar, d.arg("n"));
    }
    if (d.name == "DeltaT") {
      expect_keys(d, {"p", "s", "t"});
      long p = prime_arg(d);
      CatalogEntry e;
      e.descriptor = descriptor;
      e.lattice = std::make_shared<GLattice>(delta_t(p, d.arg("s"), d.arg("t")));
      return e;
    }
  } catch (const DescriptorError&) {
    throw;
  } catch (const std::exception& ex) {
    throw ConstructionError(d.name + ": " + ex.what());
  }
  throw DescriptorError("descriptor: unknown name " + d.name);
}

}  // namespace crys
