#include "tarski/script.hpp"

#include <sstream>

namespace tarski {

namespace {

// Fixed-point decimal with 6 places, floor-rounded, so the text depends only
// on the rational value.
std::string fixedDecimal(const Rat& q) {
  const long kDigits = 6;
  mpz_class scale = 1;
  for (long i = 0; i < kDigits; ++i) scale *= 10;
  mpz_class scaled;
  mpz_fdiv_q(scaled.get_mpz_t(), mpz_class(q.get_num() * scale).get_mpz_t(),
             q.get_den().get_mpz_t());
  bool neg = scaled < 0;
  mpz_class a = abs(scaled);
  mpz_class ip = a / scale;
  mpz_class fp = a % scale;
  std::string frac = fp.get_str();
  frac.insert(frac.begin(), kDigits - frac.size(), '0');
  return (neg ? "-" : "") + ip.get_str() + "." + frac;
}

Rat midpointOf(const std::pair<Rat, Rat>& iv) {
  return (iv.first + iv.second) / 2;
}

}  // namespace

std::string emitSvg(const ConstructionResult& result,
                    const std::array<Rat, 4>& viewBox, unsigned bits) {
  const Rat& x0 = viewBox[0];
  const Rat& y0 = viewBox[1];
  const Rat& x1 = viewBox[2];
  const Rat& y1 = viewBox[3];
  Rat w = x1 - x0;
  Rat h = y1 - y0;
  Rat r = w / 150;
  Rat font = w / 40;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
      << fixedDecimal(x0) << " " << fixedDecimal(y0) << " " << fixedDecimal(w)
      << " " << fixedDecimal(h) << "\">\n";

  auto dot = [&](const std::string& label, const Point& p) {
    Rat cx = midpointOf(p.x.approx(bits));
    // Flip: world y grows upward, SVG y grows downward.
    Rat cy = y0 + y1 - midpointOf(p.y.approx(bits));
    out << "  <circle cx=\"" << fixedDecimal(cx) << "\" cy=\""
        << fixedDecimal(cy) << "\" r=\"" << fixedDecimal(r) << "\"/>\n";
    out << "  <text x=\"" << fixedDecimal(cx + 2 * r) << "\" y=\""
        << fixedDecimal(cy - r) << "\" font-family=\"monospace\" font-size=\""
        << fixedDecimal(font) << "\">" << label << "</text>\n";
  };

  for (const auto& [name, p] : result.inputs) dot(name, p);
  for (const TraceEntry& e : result.trace)
    if (e.value.defined()) dot(e.name, e.value.point());
  out << "</svg>\n";
  return out.str();
}

}  // namespace tarski
