#include "ring.hpp"

#include "error.hpp"

#include <algorithm>
#include <map>

namespace qtorb {

namespace {

// Reject sectors that do not belong to the model: the face must exist and the
// element's coefficients must reproduce its lattice point over the face's
// characteristic vectors.
void check_sector(const CharacteristicModel& m, const TwistedSector& s,
                  const char* which) {
  const std::string tag = std::string("sector ") + which;
  if (!is_face(m.polytope, s.face.facet_set)) {
    throw Error(ErrorCode::InvalidArgument, tag + " references a non-face");
  }
  const std::size_t k = s.face.facet_set.size();
  if (s.element.coeffs.size() != k) {
    throw Error(ErrorCode::InvalidArgument, tag + " has malformed coefficients");
  }
  if (s.element.lattice_point.size() != static_cast<std::size_t>(m.polytope.dim())) {
    throw Error(ErrorCode::InvalidArgument, tag + " has a malformed lattice point");
  }
  for (const Rat& a : s.element.coeffs) {
    if (a <= 0 || a >= 1) {
      throw Error(ErrorCode::InvalidArgument,
                  tag + " is not an interior box element of its face");
    }
  }
  const IntMatrix lam = face_matrix(m, s.face);
  for (std::size_t row = 0; row < s.element.lattice_point.size(); ++row) {
    Rat sum(0);
    for (std::size_t j = 0; j < k; ++j) {
      sum += s.element.coeffs[j] * Rat(lam.at(row, j));
    }
    if (sum != Rat(s.element.lattice_point[row])) {
      throw Error(ErrorCode::InvalidArgument,
                  tag + " does not belong to this model (lattice point mismatch)");
    }
  }
}

} // namespace

SectorProduct sector_product(const CharacteristicModel& m, const TwistedSector& s1,
                             const TwistedSector& s2) {
  check_sector(m, s1, "1");
  check_sector(m, s2, "2");

  std::vector<int> support;
  std::set_union(s1.face.facet_set.begin(), s1.face.facet_set.end(),
                 s2.face.facet_set.begin(), s2.face.facet_set.end(),
                 std::back_inserter(support));

  SectorProduct out;
  if (!is_face(m.polytope, support)) {
    out.zero = true;
    return out;
  }
  out.zero = false;

  // Combined coefficient per facet of the support.
  std::map<int, Rat> combined;
  for (int fi : support) {
    combined[fi] = Rat(0);
  }
  for (std::size_t j = 0; j < s1.face.facet_set.size(); ++j) {
    combined[s1.face.facet_set[j]] += s1.element.coeffs[j];
  }
  for (std::size_t j = 0; j < s2.face.facet_set.size(); ++j) {
    combined[s2.face.facet_set[j]] += s2.element.coeffs[j];
  }

  std::vector<int> target;
  for (const auto& [fi, c] : combined) {
    if (c < 0 || c >= 2) {
      throw_internal("combined sector coefficient out of range");
    }
    if (rat_frac(c) > 0) {
      target.push_back(fi);
    }
    if (c >= 1) {
      out.theta_facets.push_back(fi);
    }
    if (c < 1) {
      out.case_tags[fi] = FacetCase::FracOnly;
    } else if (c == 1) {
      out.case_tags[fi] = FacetCase::IntegerExact;
    } else {
      out.case_tags[fi] = FacetCase::IntegerPlusFrac;
    }
  }

  out.target_face = Face{target, m.polytope.dim() - static_cast<int>(target.size())};
  out.product.face = out.target_face;
  out.product.age = 0;
  for (int fi : target) {
    const Rat a = rat_frac(combined[fi]);
    out.product.coeffs.push_back(a);
    out.product.age += a;
  }
  out.product.interior = true;

  out.product.lattice_point.assign(static_cast<std::size_t>(m.polytope.dim()), Int(0));
  for (std::size_t row = 0; row < out.product.lattice_point.size(); ++row) {
    Rat sum(0);
    for (std::size_t j = 0; j < target.size(); ++j) {
      const IntVec& lambda = m.charvecs[static_cast<std::size_t>(target[j])];
      sum += out.product.coeffs[j] * Rat(lambda[row]);
    }
    if (!rat_is_integer(sum)) {
      throw_internal("sector product has a non-integral lattice point");
    }
    out.product.lattice_point[row] = numerator(sum);
  }

  // Degree bookkeeping: ages drop by exactly one per theta facet.
  if (s1.element.age + s2.element.age !=
      out.product.age + Rat(Int(out.theta_facets.size()))) {
    throw_internal("sector product degree identity failed");
  }
  return out;
}

namespace {

bool same_support_and_element(const SectorProduct& a, const SectorProduct& b) {
  if (a.zero != b.zero) {
    return false;
  }
  if (a.zero) {
    return true;
  }
  return a.target_face.facet_set == b.target_face.facet_set &&
         a.product.coeffs == b.product.coeffs &&
         a.product.lattice_point == b.product.lattice_point;
}

} // namespace

SectorProductTable sector_product_table(const CharacteristicModel& m) {
  SectorProductTable result;
  result.sectors = twisted_sectors(m);
  const std::size_t count = result.sectors.size();

  std::map<std::pair<std::vector<int>, RatVec>, std::size_t> index;
  for (std::size_t i = 0; i < count; ++i) {
    index[{result.sectors[i].face.facet_set, result.sectors[i].element.coeffs}] = i;
  }

  result.table.assign(count, std::vector<SectorProduct>());
  for (std::size_t i = 0; i < count; ++i) {
    result.table[i].reserve(count);
    for (std::size_t j = 0; j < count; ++j) {
      result.table[i].push_back(sector_product(m, result.sectors[i], result.sectors[j]));
    }
  }

  auto product_index = [&](const SectorProduct& p) -> std::size_t {
    auto it = index.find({p.target_face.facet_set, p.product.coeffs});
    if (it == index.end()) {
      throw_internal("sector product is not itself a listed sector (closure failed)");
    }
    return it->second;
  };

  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      const SectorProduct& p = result.table[i][j];
      // Commutativity of the skeleton.
      if (!same_support_and_element(p, result.table[j][i])) {
        throw_internal("sector product table is not commutative");
      }
      if (p.zero) {
        continue;
      }
      // Closure.
      const std::size_t pi = product_index(p);
      // Identity behaviour of the untwisted sector.
      if (i == 0 && pi != j) {
        throw_internal("untwisted sector does not act as the identity");
      }
    }
  }

  // Associativity of supports and elements on all triples whose combined
  // facet set lies on a common face (the triple intersection condition).
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      for (std::size_t k = 0; k < count; ++k) {
        std::vector<int> triple;
        std::set_union(result.sectors[i].face.facet_set.begin(),
                       result.sectors[i].face.facet_set.end(),
                       result.sectors[j].face.facet_set.begin(),
                       result.sectors[j].face.facet_set.end(),
                       std::back_inserter(triple));
        std::vector<int> all;
        std::set_union(triple.begin(), triple.end(),
                       result.sectors[k].face.facet_set.begin(),
                       result.sectors[k].face.facet_set.end(),
                       std::back_inserter(all));
        if (!is_face(m.polytope, all)) {
          continue;
        }
        const SectorProduct& ij = result.table[i][j];
        const SectorProduct& jk = result.table[j][k];
        if (ij.zero || jk.zero) {
          throw_internal("product vanished on a common face");
        }
        const SectorProduct left = result.table[product_index(ij)][k];
        const SectorProduct right = result.table[i][product_index(jk)];
        if (!same_support_and_element(left, right)) {
          throw_internal("sector product is not associative on a common-face triple");
        }
      }
    }
  }
  return result;
}

} // namespace qtorb
