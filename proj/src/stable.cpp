#include "stable.hpp"

#include <map>

#include "ar.hpp"
#include "error.hpp"

namespace hsg {

StableCategory build_stable_category(QuiverPtr q, PrimeField field) {
  if (q->classify_graph().type != GraphType::dynkin)
    fail(ErrorCode::not_dynkin, "the stable category of a non-Dynkin quiver needs an explicit object list");
  std::vector<Representation> objects;
  for (auto& m : knit_indecomposables(q, field))
    if (!is_projective(m)) objects.push_back(std::move(m));
  return build_stable_category(objects);
}

StableCategory build_stable_category(const std::vector<Representation>& objects) {
  if (objects.empty()) fail(ErrorCode::invalid_argument, "stable category without objects");
  const std::size_t n = objects.size();
  const PrimeField field = objects.front().field();
  for (const auto& m : objects)
    if (is_projective(m)) fail(ErrorCode::projective_summand, "stable category object " + m.dims_string() + " is projective");

  std::vector<std::string> names;
  std::map<std::string, int> seen;
  for (const auto& m : objects) {
    std::string base = m.dims_string();
    int k = seen[base]++;
    names.push_back(k == 0 ? base : base + "#" + std::to_string(k + 1));
  }

  std::vector<StableMorphismSpace> homs;
  std::vector<std::vector<std::size_t>> dims(n, std::vector<std::size_t>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      homs.push_back(stable_hom(objects[x], objects[y]));
      dims[x][y] = homs.back().dimension();
    }
  auto hom = [&](std::size_t x, std::size_t y) -> const StableMorphismSpace& { return homs[x * n + y]; };

  std::vector<Vector> identities;
  for (std::size_t x = 0; x < n; ++x) identities.push_back(hom(x, x).stable_coordinates(identity_morphism(objects[x])));

  std::vector<Matrix> comp;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Matrix m(dims[x][z], dims[y][z] * dims[x][y], field);
        for (std::size_t b = 0; b < dims[y][z]; ++b)
          for (std::size_t a = 0; a < dims[x][y]; ++a) {
            RepMorphism gf = compose(hom(y, z).representatives()[b], hom(x, y).representatives()[a]);
            Vector coords = hom(x, z).stable_coordinates(gf);
            for (std::size_t r = 0; r < coords.size(); ++r) m(r, b * dims[x][y] + a) = coords[r];
          }
        comp.push_back(std::move(m));
      }
  auto cat = std::make_shared<const FinCat>(std::move(names), std::move(dims), std::move(identities), std::move(comp), field);
  return StableCategory{std::move(cat), objects};
}

FinCatPtr point_category(PrimeField field) {
  Matrix c(1, 1, field);
  c(0, 0) = 1;
  return std::make_shared<const FinCat>(std::vector<std::string>{"X"}, std::vector<std::vector<std::size_t>>{{1}},
                                        std::vector<Vector>{{1}}, std::vector<Matrix>{c}, field);
}

}  // namespace hsg
