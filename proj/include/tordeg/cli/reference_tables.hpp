#pragma once

#include <string>
#include <vector>

#include "tordeg/exactmath/int_matrix.hpp"

namespace tordeg::golden {

struct TableRow {
  const char* name;
  const char* word;
  bool mp;
  bool prime;
  std::vector<long> vector;
};

inline IntVec to_intvec(const std::vector<long>& xs) {
  IntVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Orbits of maximal cones of trop(Flag_4) as tabulated. The non-prime orbit has no polytope.
struct OrbitRow {
  int orbit;
  size_t size;
  bool prime;
  size_t generators;
  std::vector<size_t> f_vector;
};

const std::vector<OrbitRow> kFlag4Orbits = {
    {1, 24, true, 10, {42, 141, 202, 153, 63, 13}},
    {2, 12, true, 10, {40, 132, 186, 139, 57, 12}},
    {3, 12, true, 10, {42, 141, 202, 153, 63, 13}},
    {4, 24, true, 10, {43, 146, 212, 163, 68, 14}},
    {5, 6, false, 10, {}},
};

// String weight vectors for n = 4 as tabulated, in Plücker order.
const std::vector<TableRow> kFlag4Rows = {
    {"String 1", "121321", true, true, {0, 32, 24, 7, 0, 16, 6, 48, 38, 30, 0, 4, 20, 52}},
    {"String 1", "212321", true, true, {0, 16, 48, 7, 0, 32, 6, 24, 22, 54, 0, 4, 36, 28}},
    {"String 1", "232123", true, true, {0, 4, 36, 28, 0, 32, 24, 6, 22, 54, 0, 16, 48, 7}},
    {"String 1", "323123", true, true, {0, 4, 20, 52, 0, 16, 48, 6, 38, 30, 0, 32, 24, 7}},
    {"String 2", "123212", true, true, {0, 32, 18, 14, 0, 16, 12, 48, 44, 27, 0, 8, 24, 56}},
    {"String 2", "321232", true, true, {0, 8, 24, 56, 0, 16, 48, 12, 44, 27, 0, 32, 18, 14}},
    {"String 3", "213231", true, true, {0, 16, 48, 13, 0, 32, 12, 20, 28, 60, 0, 8, 40, 22}},
    {"String 4", "132312", false, false, {0, 16, 12, 44, 0, 8, 40, 24, 56, 15, 0, 32, 10, 26}},
};

// String weight vectors for n = 5 as tabulated. Coordinates are in the extension layout:
// the Flag_4 coordinates first, then the subsets containing 5.
const std::vector<TableRow> kFlag5Rows = {
    {"S1", "1213214321", true, true, {0, 512, 384, 112, 0, 256, 96, 768, 608, 480, 0, 64, 320, 832, 15, 14, 526, 398, 126, 12, 268, 108, 780, 620, 492, 0, 8, 72, 328, 840}},
    {"S2", "1213243212", true, true, {0, 512, 384, 98, 0, 256, 96, 768, 608, 480, 0, 64, 320, 832, 30, 28, 540, 412, 123, 24, 280, 120, 792, 632, 504, 0, 16, 80, 336, 848}},
    {"S3", "1213432312", false, false, {0, 512, 384, 74, 0, 256, 72, 768, 584, 456, 0, 64, 320, 832, 58, 56, 568, 440, 111, 48, 304, 108, 816, 620, 492, 0, 32, 96, 352, 864}},
    {"S4", "1214321432", false, false, {0, 512, 384, 56, 0, 256, 48, 768, 560, 432, 0, 32, 288, 800, 120, 112, 624, 496, 63, 96, 352, 54, 864, 566, 438, 0, 64, 36, 292, 804}},
    {"S5", "1232124321", true, true, {0, 512, 288, 224, 0, 256, 192, 768, 704, 432, 0, 128, 384, 896, 15, 14, 526, 302, 238, 12, 268, 204, 780, 716, 444, 0, 8, 136, 392, 904}},
    {"S6", "1232143213", true, true, {0, 512, 288, 224, 0, 256, 192, 768, 704, 420, 0, 128, 384, 896, 30, 28, 540, 316, 252, 24, 280, 216, 792, 728, 437, 0, 16, 144, 400, 912}},
    {"S7", "1232432123", true, true, {0, 512, 260, 196, 0, 256, 192, 768, 704, 390, 0, 128, 384, 896, 60, 56, 568, 310, 246, 48, 304, 240, 816, 752, 423, 0, 32, 160, 416, 928}},
    {"S8", "1234321232", false, false, {0, 512, 264, 152, 0, 256, 144, 768, 656, 396, 0, 128, 384, 896, 120, 112, 624, 364, 219, 96, 352, 210, 864, 722, 462, 0, 64, 192, 448, 960}},
    {"S9", "1234321323", false, false, {0, 512, 264, 152, 0, 256, 144, 768, 656, 394, 0, 128, 384, 896, 120, 112, 624, 362, 222, 96, 352, 212, 864, 724, 459, 0, 64, 192, 448, 960}},
    {"S10", "1243212432", false, false, {0, 512, 272, 112, 0, 256, 96, 768, 608, 344, 0, 64, 320, 832, 240, 224, 736, 472, 119, 192, 448, 102, 960, 614, 350, 0, 128, 68, 324, 836}},
    {"S11", "1243214323", false, false, {0, 512, 272, 112, 0, 256, 96, 768, 608, 338, 0, 64, 320, 832, 240, 224, 736, 466, 126, 192, 448, 108, 960, 620, 347, 0, 128, 72, 328, 840}},
    {"S12", "1321324321", false, false, {0, 512, 192, 448, 0, 128, 384, 640, 896, 240, 0, 256, 160, 672, 15, 14, 526, 206, 462, 12, 140, 396, 652, 908, 252, 0, 8, 264, 168, 680}},
    {"S13", "1321343231", false, false, {0, 512, 192, 448, 0, 128, 384, 640, 896, 228, 0, 256, 160, 672, 29, 28, 540, 220, 476, 24, 152, 408, 664, 920, 246, 0, 16, 272, 176, 688}},
    {"S14", "1321432143", false, false, {0, 512, 192, 448, 0, 128, 384, 640, 896, 216, 0, 256, 144, 656, 60, 56, 568, 248, 504, 48, 176, 432, 688, 944, 219, 0, 32, 288, 146, 658}},
    {"S15", "1323432123", false, false, {0, 512, 132, 388, 0, 128, 384, 640, 896, 198, 0, 256, 192, 704, 60, 56, 568, 182, 438, 48, 176, 432, 688, 944, 231, 0, 32, 288, 224, 736}},
    {"S16", "1324321243", false, false, {0, 512, 136, 392, 0, 128, 384, 640, 896, 172, 0, 256, 160, 672, 120, 112, 624, 236, 492, 96, 224, 480, 736, 992, 175, 0, 64, 320, 162, 674}},
    {"S17", "1343231243", false, false, {0, 512, 48, 304, 0, 32, 288, 544, 800, 60, 0, 256, 40, 552, 240, 224, 736, 188, 444, 192, 168, 424, 680, 936, 63, 0, 128, 384, 42, 554}},
    {"S18", "2123214321", true, true, {0, 256, 768, 112, 0, 512, 96, 384, 352, 864, 0, 64, 576, 448, 15, 14, 270, 782, 126, 12, 524, 108, 396, 364, 876, 0, 8, 72, 584, 456}},
    {"S19", "2123243212", true, true, {0, 256, 768, 98, 0, 512, 96, 384, 352, 864, 0, 64, 576, 448, 30, 28, 284, 796, 123, 24, 536, 120, 408, 376, 888, 0, 16, 80, 592, 464}},
    {"S20", "2123432132", false, false, {0, 256, 768, 76, 0, 512, 72, 384, 328, 840, 0, 64, 576, 448, 60, 56, 312, 824, 111, 48, 560, 106, 432, 362, 874, 0, 32, 96, 608, 480}},
    {"S21", "2132134321", true, true, {0, 256, 768, 224, 0, 512, 192, 320, 448, 960, 0, 128, 640, 336, 15, 14, 270, 782, 238, 12, 524, 204, 332, 460, 972, 0, 8, 136, 648, 344}},
    {"S22", "2132143214", true, true, {0, 256, 768, 224, 0, 512, 192, 320, 448, 960, 0, 128, 640, 328, 30, 28, 284, 796, 252, 24, 536, 216, 344, 472, 984, 0, 16, 144, 656, 329}},
    {"S23", "2132343212", true, true, {0, 256, 768, 194, 0, 512, 192, 320, 448, 960, 0, 128, 640, 352, 30, 28, 284, 796, 219, 24, 536, 216, 344, 472, 984, 0, 16, 144, 656, 368}},
    {"S24", "2132432124", true, true, {0, 256, 768, 196, 0, 512, 192, 320, 448, 960, 0, 128, 640, 336, 60, 56, 312, 824, 246, 48, 560, 240, 368, 496, 1008, 0, 32, 160, 672, 337}},
    {"S25", "2134321324", false, false, {0, 256, 768, 152, 0, 512, 144, 272, 400, 912, 0, 128, 640, 276, 120, 112, 368, 880, 222, 96, 608, 212, 340, 468, 980, 0, 64, 192, 704, 277}},
    {"S26", "2321234321", true, true, {0, 64, 576, 448, 0, 512, 384, 96, 352, 864, 0, 256, 768, 112, 15, 14, 78, 590, 462, 12, 524, 396, 108, 364, 876, 0, 8, 264, 776, 120}},
    {"S27", "2321243214", true, true, {0, 64, 576, 448, 0, 512, 384, 96, 352, 864, 0, 256, 768, 104, 30, 28, 92, 604, 476, 24, 536, 408, 120, 376, 888, 0, 16, 272, 784, 105}},
    {"S28", "2321432134", true, true, {0, 64, 576, 448, 0, 512, 384, 72, 328, 840, 0, 256, 768, 74, 60, 56, 120, 632, 504, 48, 560, 432, 106, 362, 874, 0, 32, 288, 800, 75}},
    {"S29", "2324321234", true, true, {0, 8, 520, 392, 0, 512, 384, 12, 268, 780, 0, 256, 768, 14, 120, 112, 108, 620, 492, 96, 608, 480, 78, 334, 846, 0, 64, 320, 832, 15}},
    {"S30", "2343212324", true, true, {0, 16, 528, 304, 0, 512, 288, 24, 280, 792, 0, 256, 768, 28, 240, 224, 216, 728, 438, 192, 704, 420, 156, 412, 924, 0, 128, 384, 896, 29}},
    {"S31", "2343213234", true, true, {0, 16, 528, 304, 0, 512, 288, 20, 276, 788, 0, 256, 768, 22, 240, 224, 212, 724, 444, 192, 704, 424, 150, 406, 918, 0, 128, 384, 896, 23}},
};

// Rows of the n = 5 table whose string polytopes are listed as unimodularly equivalent; every other
// row is its own class.
const std::vector<std::string> kFlag5SharedClass = {"S1", "S18", "S26", "S29"};

// FFLV weight vectors; n = 5 in the extension layout.
const std::vector<long> kFflv4Min = {0, 2, 2, 1, 0, 1, 1, 2, 1, 2, 0, 1, 1, 1};
const std::vector<long> kFflv4Reg = {0, 3, 4, 3, 0, 2, 2, 4, 3, 5, 0, 1, 2, 3};
const std::vector<long> kFflv5Min = {0, 3, 4, 3, 0, 2, 2, 4, 3, 5, 0, 1, 2, 3, 1,
                                     1, 1, 3, 3, 1, 1, 2, 1, 2, 3, 0, 1, 1, 1, 1};
const std::vector<long> kFflv5Reg = {0, 4, 6, 6, 0, 3, 4, 6, 6, 9, 0, 2, 4, 6, 4,
                                     3, 4, 7, 8, 2, 3, 5, 4, 6, 8, 0, 1, 2, 3, 4};

}  // namespace tordeg::golden
