// scratch probe used while developing; not part of the build
#include <iostream>

#include "bcvw/bcvw.hpp"

using namespace bcvw;

int main() {
  for (const char* name : {"sp:2", "sp:4", "opq:3,2"}) {
    auto spec = GroupSpec::parse(name);
    auto g = buildAlgebra(spec);
    std::cout << name << ": kappa = " << g.kappa << ", m0 = " << g.m0 << "\n";
    std::cout << "  C^k on V: "
              << (g.casimir(g.basisK, g.dualsK)).str().substr(0, 40) << "...\n";
  }

  // sp:2, k=1 model closure
  auto spec = GroupSpec::parse("sp:2");
  auto g = buildAlgebra(spec);
  PsSpec ps;
  ps.group = spec;
  ps.k = 1;
  ps.nu = {GaussRat::parse("3/2")};
  ps.side = Side::Mu;
  for (auto ord : {SubstOrdering::Left, SubstOrdering::Right, SubstOrdering::Symmetric}) {
    auto model = buildModel(ps, g, ord);
    std::cout << "ordering " << static_cast<int>(ord) << ": z1 = ["
              << model.gens.at("z1").str() << "] r = " << model.qc.rShift
              << " c = " << model.qc.cHecke << " eigenOk = " << model.cyclicEigenOk << "\n";
    auto iso = heckeIsomorphismCheck(model);
    std::cout << "  iso ok = " << iso.ok << " twist = " << iso.sgnTwist << "\n";
  }
  return 0;
}
