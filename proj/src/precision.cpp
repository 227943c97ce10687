#include "psums/precision.hpp"

#include "psums/types.hpp"

namespace psums {

Precision precision_from_bits(int bits) {
  switch (bits) {
    case 53:
      return Precision::Double;
    case 106:
    case 113:
      return Precision::Quad;
    case 256:
      return Precision::Bits256;
    case 512:
      return Precision::Bits512;
    default:
      throw DomainError("precision must be one of 53, 106, 256, 512 bits, got " +
                        std::to_string(bits));
  }
}

int nominal_bits(Precision p) {
  return p == Precision::Quad ? 106 : static_cast<int>(p);
}

std::string to_string(Precision p) {
  switch (p) {
    case Precision::Double:
      return "double(53)";
    case Precision::Quad:
      return "quad(113)";
    case Precision::Bits256:
      return "binary256";
    case Precision::Bits512:
      return "binary512";
  }
  return "unknown";
}

std::vector<Precision> ladder_up_to(Precision ceiling) {
  std::vector<Precision> rungs;
  for (Precision p : {Precision::Double, Precision::Quad, Precision::Bits256, Precision::Bits512}) {
    if (static_cast<int>(p) <= static_cast<int>(ceiling)) rungs.push_back(p);
  }
  return rungs;
}

}  // namespace psums
