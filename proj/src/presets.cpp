#include "wsnu/presets.hpp"

#include <array>

namespace wsnu {

namespace {

// l, n, V0, V0min, V0max, E_nl (MeV)
constexpr std::array<ReferenceRow, 25> kTableOne{{
    {1, 0, 3.6, 3.5590, 3.7191, 2.3374},
    {2, 0, 10.5, 10.2654, 11.5690, 7.0068},
    {3, 0, 20, 19.5398, 24.1289, 14.0327},
    {4, 0, 35, 30.8571, 41.9241, 22.6509},
    {5, 0, 47.78, 43.8248, 65.3471, 34.7761},
    {6, 0, 90, 58.1722, 94.6684, 35.3171},
    {7, 0, 120, 73.7179, 130.0696, 46.5875},
    {8, 0, 160, 90.3395, 171.6730, 54.5035},
    {9, 0, 200, 107.9536, 219.5620, 67.4620},
    {10, 0, 240, 126.5020, 273.7949, 85.1164},
    {11, 0, 270, 145.9433, 334.4129, 102.6090},
    {12, 0, 284, 166.2474, 401.4463, 153.2491},
    {12, 1, 284, 282.9924, 284.7013, 182.4285},
    {13, 0, 330, 187.3992, 474.9172, 177.8142},
    {13, 1, 330, 326.8691, 335.4402, 212.6080},
    {14, 0, 390, 209.3607, 554.8423, 198.7520},
    {14, 1, 390, 371.7128, 392.4902, 237.9290},
    {15, 0, 450, 232.1402, 641.2347, 223.1066},
    // printed row "15, -, 417.4850, 455.8899, 450, 267.3521" has no n; omitted
    {20, 0, 764.2, 357.9160, 1170.4901, 390.3832},
    {20, 1, 764.2, 659.4146, 868.9915, 465.7578},
    {20, 2, 764.2, 764.1028, 764.3034, 491.9299},
    {30, 0, 1690, 667.3430, 2716.9849, 834.2010},
    {30, 1, 1690, 1204.0683, 2180.2595, 968.3811},
    {30, 2, 1690, 1543.9833, 1840.3445, 1053.3543},
    {30, 3, 1690, 1687.0879, 1697.2400, 1088.9078},
}};

constexpr std::array<ReferenceRow, 23> kTableTwo{{
    {40, 0, 3000, 1052.7566, 4915.3065, 1430.1249},
    {40, 1, 3000, 1826.2400, 4144.8220, 1623.4737},
    {40, 2, 3000, 2402.9130, 3565.1490, 1767.5873},
    {40, 3, 3000, 2782.7757, 3185.2864, 1862.3459},
    {40, 4, 3000, 2965.8279, 3002.2441, 1904.9234},
    {50, 0, 4600, 1513.7067, 7765.9020, 2225.1111},
    {50, 1, 4600, 2524.5792, 6755.0294, 2477.7687},
    {50, 2, 4600, 3338.6413, 5940.9673, 2681.1670},
    {50, 3, 4600, 3955.8930, 5323.7156, 2835.2052},
    {50, 4, 4600, 4376.3344, 4903.2743, 2939.3913},
    {50, 5, 4600, 4599.9653, 4679.6434, 2986.8600},
    {100, 0, 18400, 4948.2206, 31806.3078, 8461.6670},
    {100, 1, 18400, 7148.9350, 29605.5934, 9011.8467},
    {100, 2, 18400, 9152.8390, 27601.6894, 9512.8202},
    {100, 3, 18400, 10959.9356, 25794.5958, 9964.5902},
    {100, 4, 18400, 12570.2158, 24184.3126, 10367.1561},
    {100, 5, 18400, 13983.6886, 22770.8398, 10720.5172},
    {100, 6, 18400, 15200.3509, 21554.1774, 11024.6715},
    {100, 7, 18400, 16220.2029, 20534.3254, 11279.6153},
    {100, 8, 18400, 17043.2445, 19711.2838, 11485.3387},
    {100, 9, 18400, 17669.4757, 19085.0526, 11641.8108},
    {100, 10, 18400, 18098.8965, 18655.6319, 11748.8843},
    {100, 11, 18400, 18331.5069, 18423.0215, 11804.6769},
}};

}  // namespace

std::span<const ReferenceRow> reference_rows(ReferenceTable table) {
  if (table == ReferenceTable::one) return kTableOne;
  return kTableTwo;
}

std::optional<ReferenceTable> parse_reference_table(const std::string& name) {
  if (name == "paper-table-1") return ReferenceTable::one;
  if (name == "paper-table-2") return ReferenceTable::two;
  return std::nullopt;
}

std::string to_string(ReferenceTable table) {
  return table == ReferenceTable::one ? "paper-table-1" : "paper-table-2";
}

PhysicalParams reference_params() {
  return PhysicalParams::from_mass_number(kReferenceMassNumber, kReferenceReducedMass);
}

}  // namespace wsnu
