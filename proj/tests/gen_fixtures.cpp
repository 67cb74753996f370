// Maintenance utility: regenerates the canonical JSON fixtures in fixtures/
// from the in-code models (plus the two blowup-derived models). Run from
// anywhere; pass the fixtures directory as the only argument.

#include "blowup.hpp"
#include "json_io.hpp"
#include "support/models.hpp"

#include <fstream>
#include <iostream>
#include <string>

using namespace qtorb;
using namespace qtorb::testing;

namespace {

void emit(const std::string& dir, const std::string& name, const CharacteristicModel& m) {
  const std::string path = dir + "/" + name;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out.good()) {
    std::cerr << "cannot write " << path << "\n";
    std::exit(1);
  }
  out << write_model_file(m);
  std::cout << "wrote " << path << "\n";
}

} // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_fixtures <fixtures-dir>\n";
    return 2;
  }
  const std::string dir = argv[1];

  const auto x = simplex4_model();
  emit(dir, "simplex4.json", x);
  emit(dir, "simplex4_fan.json", simplex4_fan_model());
  emit(dir, "w2.json", w2_model());
  emit(dir, "w3.json", w3_model());
  emit(dir, "cp2.json", cp2_model());
  emit(dir, "cp1xcp1.json", cp1xcp1_model());
  emit(dir, "wp112.json", wp112_model());

  // One crepant blowup of the weighted projective model, then a second one
  // resolving it to a manifold.
  const Face f1f5 = make_face(x.polytope, {0, 4});
  const auto y = blow_up(x, make_blowup_spec(x, f1f5, iv({1, 1, 1, 1})));
  emit(dir, "simplex4_y.json", y);

  const Face f5f0 = make_face(y.polytope, {4, 5});
  const auto z = blow_up(y, make_blowup_spec(y, f5f0, iv({1, 2, 2, 2})));
  emit(dir, "simplex4_z.json", z);
  return 0;
}
