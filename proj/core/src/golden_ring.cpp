#include "spinekit/golden_ring.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <sstream>

namespace spinekit {

GoldenInt eps_pow(long long k) {
  const GoldenInt base = k >= 0 ? GoldenInt::eps() : GoldenInt{-1, 1};
  long long reps = k >= 0 ? k : -k;
  GoldenInt acc = GoldenInt::one();
  for (long long i = 0; i < reps; ++i) {
    acc = acc * base;
  }
  return acc;
}

double to_real(const GoldenInt& x) {
  using Wide = boost::multiprecision::cpp_bin_float_50;
  static const Wide phi = (1 + sqrt(Wide(5))) / 2;
  const Wide value = Wide(x.a()) + Wide(x.b()) * phi;
  return value.convert_to<double>();
}

std::string to_string(const GoldenInt& x) {
  std::ostringstream out;
  out << x.a();
  if (x.b() >= 0) {
    out << " + " << x.b() << "*eps";
  } else {
    out << " - " << -x.b() << "*eps";
  }
  return out.str();
}

}  // namespace spinekit
