#include "rr5/golden.hpp"

#include <algorithm>
#include <cctype>

#include "rr5/errors.hpp"

namespace rr5::golden {

const std::vector<TableRow>& table_rows() {
  static const std::vector<TableRow> rows = {
      {11, 1, "x^4-x^3+x^2+x+1",
       {{5, 1}, {11, 2}}},
      {16, 1, "x^4-2x^3+2x+1",
       {{2, 6}, {5, 1}}},
      {19, 1, "x^4+x^3+3x^2-x+1",
       {{5, 1}, {19, 2}}},
      {24, 1, "x^8-2x^7+x^6-4x^5+3x^4+4x^3+x^2+2x+1",
       {{2, 12}, {3, 4}, {5, 6}}},
      {31, 1, "x^12-x^11+5x^10-4x^9+8x^8-2x^7+19x^6+2x^5+8x^4+4x^3+5x^2+x+1",
       {{3, 8}, {5, 15}, {31, 6}}},
      {36, 1, "x^8+x^6-6x^5+9x^4+6x^3+x^2+1",
       {{2, 8}, {3, 6}, {5, 6}, {11, 4}}},
      {39, 1, "x^16-3x^15+7x^14-9x^13+21x^12-15x^11+17x^10+3x^9+11x^8-3x^7+17x^6+15x^5+21x^4+9x^3+7x^2+3x+1",
       {{3, 8}, {5, 28}, {7, 8}, {13, 8}}},
      {44, 1, "x^12-x^11+6x^10+15x^8+9x^6+15x^4+6x^2+x+1",
       {{2, 8}, {5, 15}, {11, 6}, {19, 4}}},
      {51, 1, "x^8+x^7+x^6-7x^5+12x^4+7x^3+x^2-x+1",
       {{2, 12}, {3, 4}, {5, 6}, {17, 4}}},
      {56, 1, "x^16+8x^14-4x^13+15x^12-12x^11+50x^10+4x^9+91x^8-4x^7+50x^6+12x^5+15x^4+4x^3+8x^2+1",
       {{2, 40}, {5, 28}, {7, 8}, {31, 4}}},
      {59, 1, "x^12-4x^11+5x^10-2x^9+14x^8-2x^7-24x^6+2x^5+14x^4+2x^3+5x^2+4x+1",
       {{2, 20}, {5, 15}, {59, 6}}},
      {64, 1, "x^8+4x^7+10x^6+8x^5+12x^4-8x^3+10x^2-4x+1",
       {{2, 18}, {3, 8}, {5, 6}}},
      {71, 1, "x^28-6x^27+17x^26-45x^25+104x^24-164x^23+277x^22-357x^21+388x^20-319x^19+316x^18+135x^17-144x^16+83x^15-551x^14-83x^13-144x^12-135x^11+316x^10+319x^9+388x^8+357x^7+277x^6+164x^5+104x^4+45x^3+17x^2+6x+1",
       {{5, 91}, {7, 16}, {23, 8}, {71, 14}}},
      {76, 1, "x^12-5x^11+12x^10-2x^9-21x^8+12x^7+35x^6-12x^5-21x^4+2x^3+12x^2+5x+1",
       {{2, 8}, {3, 12}, {5, 15}, {19, 6}}},
      {79, 1, "x^20+9x^18-12x^17+18x^16-9x^15+117x^14-33x^13+99x^12-207x^11+353x^10+207x^9+99x^8+33x^7+117x^6+9x^5+18x^4+12x^3+9x^2+1",
       {{3, 28}, {5, 45}, {29, 8}, {79, 10}}},
      {84, 1, "x^16+2x^15-4x^14-12x^13+25x^12-18x^11+68x^10-112x^9+13x^8+112x^7+68x^6+18x^5+25x^4+12x^3-4x^2-2x+1",
       {{2, 32}, {3, 20}, {5, 28}, {7, 8}, {59, 4}}},
      {91, 1, "x^8+4x^7-x^6-14x^5+23x^4+14x^3-x^2-4x+1",
       {{2, 8}, {3, 4}, {5, 6}, {7, 4}, {13, 4}}},
      {96, 1, "x^16+4x^15+29x^12-24x^11+86x^10-32x^9+105x^8+32x^7+86x^6+24x^5+29x^4-4x+1",
       {{2, 32}, {3, 24}, {5, 28}, {71, 4}}},
      {99, 1, "x^8+7x^7+15x^6+15x^5+16x^4-15x^3+15x^2-7x+1",
       {{2, 12}, {3, 4}, {5, 6}, {11, 4}}},
      {104, 2, "x^24-4x^23+20x^22-40x^21+53x^20-28x^19+94x^18-92x^17+42x^16-76x^15+782x^14-328x^13-272x^12+328x^11+782x^10+76x^9+42x^8+92x^7+94x^6+28x^5+53x^4+40x^3+20x^2+4x+1",
       {{2, 84}, {5, 66}, {13, 12}, {29, 8}, {79, 4}}},
      {111, 2, "x^32-4x^31+21x^30-31x^29+144x^28-180x^27+563x^26-435x^25+1398x^24-653x^23+2108x^22+380x^21+4093x^20+1273x^19+4560x^18-990x^17+7975x^16+990x^15+4560x^14-1273x^13+4093x^12-380x^11+2108x^10+653x^9+1398x^8+435x^7+563x^6+180x^5+144x^4+31x^3+21x^2+4x+1",
       {{3, 52}, {5, 120}, {11, 12}, {37, 16}, {43, 8}, {61, 8}}},
      {116, 2, "x^24-6x^23+12x^22-24x^21+99x^20-58x^19+136x^18-256x^17+144x^16+410x^15+436x^14+274x^13-1192x^12-274x^11+436x^10-410x^9+144x^8+256x^7+136x^6+58x^5+99x^4+24x^3+12x^2+6x+1",
       {{2, 80}, {5, 66}, {7, 8}, {29, 12}, {41, 8}}},
      {119, 2, "x^40-x^39+12x^38-51x^37+146x^36-248x^35+569x^34-951x^33+2005x^32-3810x^31+8702x^30-14440x^29+26580x^28-35295x^27+47491x^26-45351x^25+53426x^24-29809x^23+41387x^22-6812x^21+31769x^20+6812x^19+41387x^18+29809x^17+53426x^16+45351x^15+47491x^14+35295x^13+26580x^12+14440x^11+8702x^10+3810x^9+2005x^8+951x^7+569x^6+248x^5+146x^4+51x^3+12x^2+x+1",
       {{5, 190}, {7, 20}, {11, 24}, {17, 20}, {19, 12}, {23, 16}, {47, 8}}},
      {124, 2, "x^12-7x^11+9x^10+8x^9+24x^8+6x^7-67x^6-6x^5+24x^4-8x^3+9x^2+7x+1",
       {{3, 12}, {5, 15}, {11, 4}, {31, 6}}},
      {131, 2, "x^20+20x^18+8x^17+48x^16+4x^15+72x^14+88x^13+348x^12+168x^11+446x^10-168x^9+348x^8-88x^7+72x^6-4x^5+48x^4-8x^3+20x^2+1",
       {{2, 76}, {5, 45}, {31, 4}, {131, 10}}},
      {136, 2, "x^16+6x^15+25x^14+24x^13-3x^12+119x^10+174x^9+404x^8-174x^7+119x^6-3x^4-24x^3+25x^2-6x+1",
       {{2, 56}, {3, 16}, {5, 28}, {11, 8}, {17, 8}}},
      {139, 2, "x^12-5x^11+12x^10+16x^9+33x^8+12x^7-55x^6-12x^5+33x^4-16x^3+12x^2+5x+1",
       {{2, 24}, {3, 12}, {5, 15}, {139, 6}}},
      {144, 2, "x^16-2x^15+18x^14+24x^13+83x^12+78x^11+74x^10+40x^9+9x^8-40x^7+74x^6-78x^5+83x^4-24x^3+18x^2+2x+1",
       {{2, 24}, {3, 12}, {5, 28}, {7, 8}, {11, 4}, {19, 8}}},
  };
  return rows;
}

const TableRow* find_row(long d) {
  const auto& rows = table_rows();
  auto it = std::find_if(rows.begin(), rows.end(), [d](const TableRow& r) { return r.d == d; });
  return it == rows.end() ? nullptr : &*it;
}

std::vector<long> table_discriminants(int table) {
  std::vector<long> out;
  for (const auto& r : table_rows())
    if (table == 0 || r.table == table) out.push_back(r.d);
  return out;
}

const std::map<long, std::string>& class_polys() {
  static const std::map<long, std::string> m = {
      {4, "x-1728"},
      {11, "x+32768"},
      {16, "x-287496"},
      {19, "x+884736"},
      {24, "x^2-4834944x+14670139392"},
      {36, "x^2-153542016x-1790957481984"},
      {51, "x^2+5541101568x+6262062317568"},
      {64, "x^2-82226316240x-7367066619912"},
      {91, "x^2+10359073013760x-3845689020776448"},
      {99, "x^2+37616060956672x-56171326053810176"},
  };
  return m;
}

const std::map<long, std::string>& r_polys() {
  static const std::map<long, std::string> m = {
      {11, "x^2+4x+48"},
      {16, "x^2+18x+202"},
      {19, "x^2+36x+400"},
      {24, "x^4-12x^3+20x^2+3120x+16912"},
      {36, "x^4+60x^3+3020x^2+51984x+287248"},
      {51, "x^4-24x^3+6800x^2+155136x+852736"},
      {64, "x^4-216x^3+17234x^2+430380x+2362354"},
      {91, "x^4-216x^3+154448x^2+3449088x+18965248"},
      {99, "x^4+872x^3+292624x^2+6230016x+34284288"},
      {84, "x^8-468x^7+81124x^6+3053232x^5+65642496x^4+1156633920x^3"
           "+13586087488x^2+88268813568x+244368064768"},
      {96, "x^8+324x^7+230848x^6+5080248x^5+32351604x^4+88662672x^3"
           "+675333328x^2+2681910144x+7697193232"},
  };
  return m;
}

const std::map<long, std::string>& q_polys() {
  static const std::map<long, std::string> m = {
      {11, "x^4+4x^3+46x^2-4x+1"},
      {16, "x^4+18x^3+200x^2-18x+1"},
      {19, "x^4+36x^3+398x^2-36x+1"},
  };
  return m;
}

const char* const kF19 = "(x^4+36x^3+398x^2-36x+1)(x^8+76x^6-24474x^4+76x^2+1)";
const char* const kF4 = "(x^2+1)^2(x^4+18x^3+74x^2-18x+1)^2";

const std::vector<std::string> kG4Factors = {
    "x^10+1",
    "x^4+2x^3-6x^2-2x+1",
    "x^8+4x^7+17x^6+22x^5+5x^4-22x^3+17x^2-4x+1",
    "x^8-6x^7+17x^6-18x^5+25x^4+18x^3+17x^2+6x+1",
};

const char* const kQ19 =
    "x^16-x^15-2x^14+6x^13-2x^12+19x^11-5x^10-60x^9+96x^8+60x^7"
    "-5x^6-19x^5-2x^4-6x^3-2x^2+x+1";
const char* const kP19TildeNeg = "x^8+16x^7+7x^6-22x^5-45x^4+22x^3+7x^2-16x+1";
const char* const kM36 =
    "x^16+38x^15-240x^14-300x^13-235x^12-726x^11+92x^10-1840x^9"
    "-675x^8+1840x^7+92x^6+726x^5-235x^4+300x^3-240x^2-38x+1";

const Sqrt5Poly kM1 = {
    "x^8+19x^7+2x^6-23x^5+65x^4+23x^3+2x^2-19x+1",
    "11x^7+3x^6-5x^5+30x^4+5x^3+3x^2-11x",
};
const Sqrt5Poly kM2 = {
    "x^4+19x^3+6x^2+34x+71",
    "11x^3+3x^2+28x+36",
};

const char* const kSmallH = "x^4+7x^3+4x^2+18x+1";
const char* const kBigH =
    "x^4+5584305x^3-32305549025x^2+63531273863125x-42135109852484375";

QPoly poly(const std::string& text) {
  // Products of parenthesised factors with optional integer powers.
  if (text.find('(') == std::string::npos) return exact::parse_qpoly(text);
  QPoly acc(1L);
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '(') throw DomainError("malformed product: " + text);
    std::size_t close = text.find(')', i);
    if (close == std::string::npos) throw DomainError("malformed product: " + text);
    QPoly f = exact::parse_qpoly(text.substr(i + 1, close - i - 1));
    i = close + 1;
    unsigned long e = 1;
    if (i < text.size() && text[i] == '^') {
      std::size_t start = ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      e = std::stoul(text.substr(start, i - start));
    }
    acc *= exact::pow(f, e);
  }
  return acc;
}

}  // namespace rr5::golden
