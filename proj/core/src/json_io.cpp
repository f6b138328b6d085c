#include "crys/json_io.hpp"

#include <json.hpp>

#include <cctype>
#include <sstream>

namespace crys {

using OJson = nlohmann::ordered_json;

std::string rat_string(const Rat& r) { return r.get_str(); }

Rat rat_parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("rat_parse: empty string");
  for (char c : text)
    if (!(std::isdigit(unsigned(c)) || c == '-' || c == '/'))
      throw std::invalid_argument("rat_parse: bad character in " + text);
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
    throw std::invalid_argument("rat_parse: cannot parse " + text);
  if (r.get_den() == 0) throw std::invalid_argument("rat_parse: zero denominator");
  r.canonicalize();
  return r;
}

std::string group_string(const PGroup& G) { return G.descriptor(); }

std::string element_string(const PGroup& G, const GroupElement& g) {
  if (is_identity(G, g)) return "1";
  std::string s;
  if (g.i != 0) s += g.i == 1 ? "a" : "a^" + std::to_string(g.i);
  if (g.j != 0) s += std::string(s.empty() ? "" : " ") + (g.j == 1 ? "b" : "b^" + std::to_string(g.j));
  return s;
}

namespace {

std::vector<std::string> generator_names(const PGroup& G) {
  return G.kind() == GroupKind::Klein ? std::vector<std::string>{"a", "b"}
                                      : std::vector<std::string>{"a"};
}

OJson matrix_json(const IntMatrix& A) {
  OJson rows = OJson::array();
  for (int i = 0; i < A.rows(); ++i) {
    OJson row = OJson::array();
    for (int j = 0; j < A.cols(); ++j) row.push_back(A.at(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

OJson ratvec_json(const RatVec& v) {
  OJson arr = OJson::array();
  for (const auto& r : v) arr.push_back(rat_string(r));
  return arr;
}

OJson cocycle_json(const Cocycle& T) {
  OJson obj = OJson::object();
  auto names = generator_names(T.lattice->group());
  for (size_t k = 0; k < names.size(); ++k) obj[names[k]] = ratvec_json(T.values[k].coords);
  return obj;
}

OJson lattice_json(const GLattice& L) {
  OJson obj = OJson::object();
  obj["group"] = L.group().descriptor();
  obj["rank"] = L.rank();
  OJson act = OJson::object();
  const PGroup& G = L.group();
  act["a"] = matrix_json(L.action_of(element(G, 1, 0)));
  if (G.kind() == GroupKind::Klein) act["b"] = matrix_json(L.action_of(element(G, 0, 1)));
  obj["action"] = std::move(act);
  return obj;
}

std::string matrix_text(const IntMatrix& A, const std::string& indent) {
  std::ostringstream os;
  for (int i = 0; i < A.rows(); ++i) {
    os << indent << "[";
    for (int j = 0; j < A.cols(); ++j) os << (j ? " " : "") << A.at(i, j).get_str();
    os << "]\n";
  }
  return os.str();
}

std::string ratvec_text(const RatVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << rat_string(v[i]);
  os << ")";
  return os.str();
}

OJson subgroup_json(const PGroup& G, const SubgroupCheck& chk) {
  OJson s = OJson::object();
  s["generator"] = element_string(G, chk.generator);
  s["restricted_class_vanishes"] = chk.vanishes;
  if (chk.vanishes) {
    s["witness"] = ratvec_json(*chk.witness_x);
  } else {
    OJson cls = OJson::array();
    for (const auto& c : chk.restricted_class) cls.push_back(c.get_str());
    s["restricted_class"] = std::move(cls);
  }
  return s;
}

std::string dump(const OJson& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string entry_json(const CatalogEntry& e) {
  OJson obj = OJson::object();
  obj["descriptor"] = e.descriptor;
  OJson lat = lattice_json(*e.lattice);
  for (auto& [k, v] : lat.items()) obj[k] = v;
  OJson cocs = OJson::object();
  for (const auto& [name, T] : e.canonical_cocycles) cocs[name] = cocycle_json(T);
  obj["cocycles"] = std::move(cocs);
  return dump(obj);
}

std::string entry_text(const CatalogEntry& e) {
  std::ostringstream os;
  const GLattice& L = *e.lattice;
  os << e.descriptor << "\n";
  os << "group: " << L.group().descriptor() << "\n";
  os << "rank: " << L.rank() << "\n";
  for (const auto& name : generator_names(L.group())) {
    GroupElement g = name == "a" ? element(L.group(), 1, 0) : element(L.group(), 0, 1);
    os << "action(" << name << "):\n" << matrix_text(L.action_of(g), "  ");
  }
  for (const auto& [name, T] : e.canonical_cocycles) {
    os << "cocycle " << name << ":";
    auto names = generator_names(L.group());
    for (size_t k = 0; k < names.size(); ++k)
      os << " " << names[k] << " -> " << ratvec_text(T.values[k].coords);
    os << "\n";
  }
  return os.str();
}

std::string h1_json(const std::string& descriptor, const CohomologyResult& res) {
  OJson obj = OJson::object();
  obj["descriptor"] = descriptor;
  OJson fac = OJson::array();
  for (const auto& f : res.group_structure().invariant_factors) fac.push_back(f.get_str());
  obj["h1"] = OJson::object({{"invariant_factors", fac},
                             {"order", res.order().get_str()},
                             {"structure", res.group_structure().to_string()}});
  OJson reps = OJson::array();
  for (const auto& T : res.representatives()) reps.push_back(cocycle_json(T));
  obj["representatives"] = std::move(reps);
  return dump(obj);
}

std::string h1_text(const std::string& descriptor, const CohomologyResult& res) {
  std::ostringstream os;
  os << descriptor << "\n";
  os << "H1 = " << res.group_structure().to_string() << " (order " << res.order().get_str() << ")\n";
  auto names = generator_names(res.lattice()->group());
  for (size_t i = 0; i < res.representatives().size(); ++i) {
    os << "generator " << i + 1 << ":";
    for (size_t k = 0; k < names.size(); ++k)
      os << " " << names[k] << " -> " << ratvec_text(res.representatives()[i].values[k].coords);
    os << "\n";
  }
  return os.str();
}

std::string certificate_json(const CrysGroup& C, const TorsionCertificate& cert) {
  const PGroup& G = C.point_group();
  OJson obj = OJson::object();
  obj["verdict"] = cert.torsion_free ? "torsion_free" : "has_torsion";
  OJson subs = OJson::array();
  for (const auto& chk : cert.checks) subs.push_back(subgroup_json(G, chk));
  obj["subgroups"] = std::move(subs);
  if (cert.witness) {
    obj["witness"] = OJson::object({{"generator", element_string(G, cert.witness->element.g)},
                                    {"x", ratvec_json(cert.witness->element.x)},
                                    {"order", cert.witness->order}});
  }
  return dump(obj);
}

std::string certificate_text(const CrysGroup& C, const TorsionCertificate& cert) {
  const PGroup& G = C.point_group();
  std::ostringstream os;
  os << "verdict: " << (cert.torsion_free ? "torsion_free" : "has_torsion") << "\n";
  for (const auto& chk : cert.checks) {
    os << "subgroup <" << element_string(G, chk.generator) << ">: ";
    if (chk.vanishes)
      os << "restriction vanishes, witness x = " << ratvec_text(*chk.witness_x) << "\n";
    else {
      os << "restriction nonvanishing, class (";
      for (size_t i = 0; i < chk.restricted_class.size(); ++i)
        os << (i ? ", " : "") << chk.restricted_class[i].get_str();
      os << ")\n";
    }
  }
  if (cert.witness)
    os << "torsion element: (" << element_string(G, cert.witness->element.g) << ", "
       << ratvec_text(cert.witness->element.x) << ") of order " << cert.witness->order << "\n";
  return os.str();
}

Cocycle cocycle_from_json(LatticePtr L, const std::string& text) {
  OJson obj;
  try {
    obj = OJson::parse(text);
  } catch (const std::exception& ex) {
    throw std::invalid_argument(std::string("cocycle_from_json: ") + ex.what());
  }
  if (!obj.is_object()) throw std::invalid_argument("cocycle_from_json: expected an object");
  Cocycle T{L, {}};
  for (const auto& name : generator_names(L->group())) {
    if (!obj.contains(name))
      throw std::invalid_argument("cocycle_from_json: missing generator " + name);
    const auto& arr = obj[name];
    if (!arr.is_array() || int(arr.size()) != L->rank())
      throw std::invalid_argument("cocycle_from_json: generator " + name + " needs " +
                                  std::to_string(L->rank()) + " entries");
    RatVec v;
    for (const auto& item : arr) {
      if (item.is_number_integer())
        v.push_back(Rat(item.get<long>()));
      else if (item.is_string())
        v.push_back(rat_parse(item.get<std::string>()));
      else
        throw std::invalid_argument("cocycle_from_json: entries must be integers or strings");
    }
    T.values.push_back(CosetVector::reduce(v));
  }
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const auto& name : generator_names(L->group()))
      if (it.key() == name) known = true;
    if (!known) throw std::invalid_argument("cocycle_from_json: unknown key " + it.key());
  }
  if (!validate_cocycle(T))
    throw std::invalid_argument("cocycle_from_json: cocycle identity fails");
  return T;
}

namespace {

OJson row_json(const ClassifiedRow& r) {
  return OJson::object({{"descriptor", r.descriptor},
                        {"h1_structure", r.h1_structure.to_string()},
                        {"h1_order", r.h1_order.get_str()},
                        {"torsion_free_classes", r.torsion_free_classes},
                        {"orbits", r.iso_orbits}});
}

}  // namespace

std::string theorem2_json(const Theorem2Report& rep) {
  OJson obj = OJson::object();
  obj["p"] = rep.p;
  OJson rows = OJson::array();
  for (const auto& r : rep.rows) rows.push_back(row_json(r));
  obj["rows"] = std::move(rows);
  obj["total_orbits"] = rep.total_orbits;
  obj["expected_total"] = rep.expected_total;
  return dump(obj);
}

std::string theorem2_tsv(const Theorem2Report& rep) {
  std::ostringstream os;
  os << "descriptor\th1\th1_order\ttorsion_free_classes\torbits\n";
  for (const auto& r : rep.rows)
    os << r.descriptor << "\t" << r.h1_structure.to_string() << "\t" << r.h1_order.get_str()
       << "\t" << r.torsion_free_classes << "\t" << r.iso_orbits << "\n";
  os << "total\t\t\t\t" << rep.total_orbits << "\n";
  return os.str();
}

std::string theorem2_text(const Theorem2Report& rep) {
  std::ostringstream os;
  os << "p = " << rep.p << "\n";
  for (const auto& r : rep.rows)
    os << "  " << r.descriptor << ": H1 = " << r.h1_structure.to_string()
       << ", torsion-free classes " << r.torsion_free_classes << ", orbits " << r.iso_orbits
       << "\n";
  os << "total orbits " << rep.total_orbits << " (expected " << rep.expected_total << ")\n";
  return os.str();
}

namespace {

OJson t3row_json(const Theorem3Row& r) {
  return OJson::object({{"kind", klein_kind_name(r.kind)},
                        {"n", r.n},
                        {"degree", r.kind == KleinKind::DeltaN || r.kind == KleinKind::DeltaNStar
                                       ? 4 * r.n + 1
                                       : 4 * r.n + 4},
                        {"h1_order", r.counts.h1_order.get_str()},
                        {"param_count", r.counts.param_count},
                        {"torsion_free_classes", r.counts.torsion_free_classes},
                        {"torsion_free_count", r.counts.torsion_free_count},
                        {"expected_count", r.expected_count}});
}

}  // namespace

std::string theorem3_json(const std::vector<Theorem3Row>& rows) {
  OJson arr = OJson::array();
  for (const auto& r : rows) arr.push_back(t3row_json(r));
  return dump(arr);
}

std::string theorem3_tsv(const std::vector<Theorem3Row>& rows) {
  std::ostringstream os;
  os << "kind\tn\tdegree\th1_order\ttorsion_free_count\texpected\n";
  for (const auto& r : rows) {
    long deg = (r.kind == KleinKind::DeltaN || r.kind == KleinKind::DeltaNStar) ? 4 * r.n + 1
                                                                                : 4 * r.n + 4;
    os << klein_kind_name(r.kind) << "\t" << r.n << "\t" << deg << "\t"
       << r.counts.h1_order.get_str() << "\t" << r.counts.torsion_free_count << "\t"
       << r.expected_count << "\n";
  }
  return os.str();
}

std::string theorem3_text(const std::vector<Theorem3Row>& rows) {
  std::ostringstream os;
  for (const auto& r : rows)
    os << klein_kind_name(r.kind) << " n=" << r.n << ": torsion-free count "
       << r.counts.torsion_free_count << " (expected " << r.expected_count << ")\n";
  return os.str();
}

}  // namespace crys
