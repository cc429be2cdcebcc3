#ifndef COLLATZ_TESTS_REFERENCE_TABLES_HPP
#define COLLATZ_TESTS_REFERENCE_TABLES_HPP

// Reference values, copied verbatim as strings. A few cells are known to be
// wrong; they are kept as they are, and tests that rely on the
// affected cells say so.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ref {

struct NodeRow {
    int main;
    int secondary;
    bool pp;           // value shown in the PP column
    const char* value; // lambda (14 decimals) or delta (28 decimals)
    std::int64_t k1;
    std::int64_t k2;
    std::int64_t k;
    const char* ln_C; // "" when blank
    const char* ln_R;
    const char* ln_P;
    const char* rs;
};

inline const std::vector<NodeRow> kPermutationNodes = {
    {1, 1, true, "0.66666666666667", 0, 1, 1, "", "", "", ""},
    {1, 1, false, "1.33333333333333", 1, 0, 1, "", "", "", ""},
    {2, 1, true, "0.88888888888889", 1, 1, 2, "0.91", "0.59", "2.20", "2"},
    {3, 1, false, "1.18518518518519", 2, 1, 3, "1.23", "0.73", "3.30", "1.535"},
    {3, 2, false, "1.05349794238683", 3, 2, 5, "2.82", "1.10", "5.49", "2.665"},
    {4, 1, true, "0.93644261545496", 4, 3, 7, "2.88", "1.36", "7.69", "2.508"},
    {4, 2, true, "0.98654036854514", 7, 5, 12, "5.02", "1.66", "13.18", "3.921"},
    {5, 1, false, "1.03931824834386", 10, 7, 17, "4.33", "1.87", "18.68", "2.946"},
    {5, 2, false, "1.02532940775684", 17, 12, 29, "5.29", "2.31", "31.86", "3.346"},
    {5, 3, false, "1.01152885180861", 24, 17, 41, "6.41", "2.66", "45.04", "4.062"},
    {6, 1, true, "0.99791404625731", 31, 22, 53, "8.37", "2.97", "58.23", "5.618"},
    {7, 1, false, "1.00941884941434", 55, 39, 94, "7.44", "3.84", "103.27", "4.246"},
    {7, 2, false, "1.00731324838746", 86, 61, 147, "8.14", "4.84", "161.50", "4.477"},
    {7, 3, false, "1.00521203954693", 117, 83, 200, "8.79", "5.76", "219.72", "4.785"},
    {7, 4, false, "1.00311521373084", 148, 105, 253, "9.54", "6.65", "277.95", "5.253"},
    {7, 5, false, "1.00102276179641", 179, 127, 306, "10.84", "7.51", "336.18", "6.267"},
    {8, 1, true, "0.99893467461992", 210, 149, 359, "10.96", "8.36", "394.40", "6.230"},
    {8, 2, true, "0.99995634684222", 389, 279, 665, "14.77", "13.11", "730.58", "9.138"},
    {9, 1, false, "1.00097906399185", 568, 403, 971, "12.04", "17.74", "1066.75", "6.307"},
    {9, 2, false, "1.00093536809484", 957, 679, 1636, "12.61", "27.65", "1797.33", "6.349"},
    {9, 22, false, "1.00006185061131", 8737, 6199, 14936, "17.53", "221.70", "16408.87", "8.821"},
    {9, 23, false, "1.00001819475356", 9126, 6475, 15601, "18.81", "231.37", "17139.45", "9.935"},
};

inline const std::vector<NodeRow> kPermutationDeltas = {
    {7, 4, false, "0.0031152137308416658467349706", 148, 105, 253, "9.5381", "6.647", "277.9", "5.253407026"},
    {7, 5, false, "0.0010227617964117672208313996", 179, 127, 306, "10.8410", "7.512", "336.2", "6.267223422"},
    {8, 1, true, "0.0010653253800741109929206204", 210, 149, 359, "10.9589", "8.362", "394.4", "6.230109635"},
    {8, 2, true, "0.0000436531577618341853224779", 389, 276, 665, "14.7706", "13.109", "730.6", "9.138105444"},
    {9, 1, false, "0.0009790639918678842653176021", 568, 403, 971, "12.0394", "17.737", "1066.8", "6.306968914"},
    {9, 2, false, "0.0009353680948711569096002737", 957, 679, 1636, "12.6067", "27.645", "1797.3", "6.348527587"},
    {9, 3, false, "0.0008916741053383146967578837", 1346, 955, 2301, "12.9956", "37.463", "1797.3", "6.392072906"},
    {9, 4, false, "0.0008479820231860908048872943", 1735, 1231, 2966, "13.2997", "47.238", "3258.5", "6.437804487"},
    {9, 5, false, "0.0008042918483312220469450805", 2124, 1507, 3631, "13.5549", "56.986", "3989.1", "6.485953628"},
    {9, 6, false, "0.0007606035806904488705888572", 2513, 1783, 4296, "13.7789", "66.718", "4719.6", "6.536790394"},
    {9, 7, false, "0.0007169172201805153580186127", 2902, 2059, 4961, "13.9819", "76.437", "5450.2", "6.590632794"},
    {9, 8, false, "0.0006732327667181692258180498", 3291, 2335, 5626, "14.1706", "86.148", "6180.8", "6.647858848"},
    {9, 9, false, "0.0006295502202201618247959332", 3680, 2611, 6291, "14.3493", "95.851", "6911.4", "6.708922707"},
    {9, 10, false, "0.0005858695806032481398274443", 4069, 2887, 6956, "14.5217", "105.549", "7641.9", "6.774376574"},
    {9, 11, false, "0.0005421908477841867896955426", 4458, 3163, 7621, "14.6905", "115.242", "8372.5", "6.844901134"},
    {9, 12, false, "0.000498514021679740026932334", 4847, 3439, 8286, "14.8581", "124.932", "9103.1", "6.921348796"},
    {9, 13, false, "0.0004548391022066737376604466", 5236, 3715, 8951, "15.0270", "134.618", "9833.7", "7.004806793"},
    {9, 14, false, "0.0004111660892817574414344127", 5625, 3991, 9616, "15.1996", "144.301", "10564.3", "7.09669225"},
    {9, 15, false, "0.000367494982821764291082058", 6014, 4267, 10281, "15.3787", "153.982", "11294.8", "7.198900807"},
    {9, 16, false, "0.0003238257827434710725458978", 6403, 4543, 10946, "15.5678", "163.661", "12025.4", "7.314049713"},
    {9, 17, false, "0.0002801584889636582047245402", 6792, 4819, 11611, "15.7717", "173.338", "12756.0", "7.445898036"},
    {9, 18, false, "0.000236493101399109739314096", 7181, 5095, 12276, "15.9968", "183.013", "13486.6", "7.600125728"},
    {9, 19, false, "0.0001928296199666133606495956", 7570, 5371, 12941, "16.2536", "192.687", "14217.1", "7.785916511"},
    {9, 20, false, "0.0001491680445829603855464127", 7959, 5647, 13606, "16.5604", "202.360", "14947.7", "8.019605426"},
    {9, 21, false, "0.0001055083751649457631416954", 8348, 5923, 14271, "16.9544", "212.031", "15678.3", "8.334805934"},
    {9, 22, false, "0.0000618506116293680747358036", 8737, 6199, 14936, "17.5340", "221.702", "16408.9", "8.820935894"},
    {9, 23, false, "0.0000181947538930295336337538", 9126, 6475, 15601, "18.8011", "231.371", "17139.5", "9.93469431"},
    {10, 1, true, "0.00002545911981272640150133296", 9515, 6751, 16266, "18.5069", "241.039", "17870.0", "9.628905092"},
    {10, 2, true, "0.0000072649074580787208226725", 18641, 13226, 31867, "20.4334", "467.708", "35009.5", "10.77036469"},
    {11, 1, false, "0.0000109297142517475574299296", 27767, 19701, 47468, "20.4235", "694.239", "52148.9", "10.39859604"},
    {11, 2, false, "0.000003664727390306254413089", 46408, 32927, 79335, "22.0298", "1156.808", "87158.4", "11.39324285"},
    {12, 1, true, "0.0000036002066916778116074911", 65049, 46153, 111202, "22.3853", "1619.289", "122167.9", "11.40941115"},
    {13, 1, false, "0.0000000645075048523645826212", 111457, 79080, 190537, "26.9457", "2770.514", "209326.3", "15.07036143"},
    {14, 1, true, "0.000003535699419065802125212", 176506, 125233, 301739, "23.4016", "4384.012", "331494.2", "11.42586839"},
    {14, 2, true, "0.0000034711921422925849744807", 287963, 204313, 492276, "23.9095", "7148.481", "540820.5", "11.44262867"},
    {14, 3, true, "0.0000034066848613581643542882", 399420, 283393, 682813, "24.2554", "9912.869", "750146.8", "11.45970335"},
    {14, 4, true, "0.0000033421757626253399962058", 510877, 362473, 873350, "24.5206", "12677.217", "959473.0", "11.47710446"},
};

inline const std::vector<NodeRow> kShortcutNodes = {
    {1, 1, true, "0.50000000000000", 0, 1, 1, "", "", "", ""},
    {1, 1, false, "1.500000000000000", 1, 0, 1, "", "", "", ""},
    {2, 1, true, "0.75000000000000", 1, 1, 2, "0.37", "0.57", "1.39", "1.262"},
    {3, 1, false, "1.12500000000000", 2, 1, 3, "1.96", "0.89", "2.08", "1.893"},
    {4, 1, true, "0.84375000000000", 3, 2, 5, "2.00", "1.11", "3.47", "1.690"},
    {4, 2, true, "0.94921875000000", 5, 3, 8, "3.69", "1.49", "5.55", "2.713"},
    {5, 1, false, "1.06787109375000", 7, 4, 11, "3.79", "1.80", "7.62", "2.449"},
    {5, 2, false, "1.01364326477050", 12, 7, 19, "5.91", "2.33", "13.17", "3.909"},
    {6, 1, true, "0.96216919273138", 17, 10, 27, "5.21", "2.76", "18.71", ""},
    {6, 2, true, "0.97529632178184", 29, 17, 46, "6.18", "3.69", "31.88", "3.369"},
    {6, 3, true, "0.98860254772961", 41, 24, 65, "7.31", "4.53", "45.05", ""},
    {7, 1, false, "1.00209031404109", 53, 31, 84, "9.27", "5.32", "58.22", "5.617"},
    {8, 1, true, "0.99066903751619", 94, 55, 149, "8.34", "7.86", "103.28", "4.255"},
    {8, 2, true, "0.99273984691538", 147, 86, 233, "9.04", "10.99", "161.50", "4.483"},
    {8, 3, true, "0.99481498495653", 200, 117, 317, "9.68", "14.06", "219.73", "4.790"},
    {8, 4, true, "0.99689446068787", 253, 148, 401, "10.43", "17.10", "277.95", "5.256"},
    {8, 5, true, "0.99897828317652", 306, 179, 485, "11.73", "20.11", "336.18", "6.268"},
    {9, 1, false, "1.00106646150859", 359, 210, 569, "11.85", "23.10", "394.40", "6.229"},
    {9, 2, false, "1.00004365506344", 665, 389, 1054, "15.66", "40.23", "730.58", "9.138"},
    {10, 1, true, "0.99902189363685", 971, 568, 1539, "12.93", "57.24", "1066.75", "6.308"},
    {10, 2, true, "0.99906550600100", 1636, 957, 2593, "13.50", "94.07", "1797.33", "6.349"},
    {10, 22, true, "0.99993815321363", 14936, 8737, 23673, "18.43", "826.40", "16408.87", "8.821"},
    {10, 23, true, "0.99998180557715", 15601, 9126, 24727, "19.69", "862.98", "17139.45", "9.935"},
};

inline const std::vector<std::pair<std::string, std::string>> kClassListing = {
    {"(2,3,2,3,2)", "(1,0,1,0,1)"},
    {"(4,5,7,9,6)", "(-1,1,-1,0,0)"},
    {"(5,7,9,6,4)", "(1,-1,0,0,-1)"},
    {"(6,4,5,7,9)", "(0,-1,1,-1,0)"},
    {"(7,9,6,4,5)", "(-1,0,0,-1,1)"},
    {"(9,6,4,5,7)", "(0,0,-1,1,-1)"},
    {"(12,8,11,15,10)", "(0,1,1,0,-1)"},
    {"(21,14,19,25,33)", "(0,1,-1,-1,0)"},
    {"(24,16,21,14,19)", "(0,-1,0,1,-1)"},
    {"(25,33,22,29,39)", "(-1,0,-1,1,0)"},
    {"(26,35,47,63,42)", "(1,1,1,0,0)"},
    {"(32,43,57,38,51)", "(1,-1,0,1,0)"},
    {"(33,22,29,39,26)", "(0,-1,1,0,1)"},
    {"(35,47,63,42,28)", "(1,1,0,0,-1)"},
    {"(39,26,35,47,63)", "(0,1,1,1,0)"},
    {"(43,57,38,51,34)", "(-1,0,1,0,-1)"},
    {"(47,63,42,28,37)", "(1,0,0,-1,-1)"},
    {"(48,32,44,57,38)", "(0,1,-1,0,1)"},
    {"(52,69,46,61,81)", "(-1,0,-1,-1,0)"},
    {"(59,79,105,70,93)", "(1,-1,0,-1,0)"},
    {"(62,83,111,74,99)", "(1,1,0,1,0)"},
    {"(63,42,28,37,49)", "(0,0,-1,-1,-1)"},
    {"(66,44,59,79,105)", "(0,1,1,-1,0)"},
    {"(70,93,62,83,111)", "(-1,0,1,1,0)"},
    {"(74,99,66,44,59)", "(1,0,0,1,1)"},
    {"(78,52,69,46,61)", "(0,-1,0,-1,-1)"},
    {"(79,105,70,93,62)", "(-1,0,-1,0,1)"},
    {"(84,56,75,50,67)", "(0,1,0,1,-1)"},
    {"(86,115,153,102,68)", "(1,-1,0,0,1)"},
    {"(237,158,211,281,375)", "(0,1,-1,1,0)"},
    {"(238,317,423,282,188)", "(-1,1,0,0,1)"},
    {"(239,319,425,567,378)", "(1,-1,1,0,0)"},
    {"(241,321,214,285,190)", "(-1,0,-1,0,-1)"},
};

// Nodes preceding a change of main node, nodes 7 to 13.
inline const std::vector<std::pair<int, int>> kPreswitchNodes = {
    {7, 5}, {8, 2}, {9, 23}, {10, 2}, {11, 2}, {12, 1}, {13, 1},
};

inline const std::vector<std::vector<std::int64_t>> kPermutationCycles = {
    {-44, -59, -79, -105, -70, -93, -62, -83, -111, -74, -99, -66},
    {-4, -5, -7, -9, -6},
    {-2, -3},
    {-1},
    {0},
    {1},
    {2, 3},
    {4, 5, 7, 9, 6},
    {44, 59, 79, 105, 70, 93, 62, 83, 111, 74, 99, 66},
};

inline const std::vector<std::vector<std::int64_t>> kShortcutCycles = {
    {1, 2},
    {0},
    {-1},
    {-5, -7, -10},
    {-17, -25, -37, -55, -82, -41, -61, -91, -136, -68, -34},
};

// Deep run, main node 26.
inline constexpr std::int64_t kDeepK1 = 3'604'781'551'041;
inline constexpr std::int64_t kDeepK2 = 2'557'633'213'319;
inline constexpr std::int64_t kDeepPrintedK = 6'612'414'764'360; // wrong: k1 + k2 is 6,162,414,764,360
inline constexpr double kDeepLnC = 58.25;
inline constexpr double kDeepLnP = 6'770'104'587'996.0;
inline constexpr double kDeepLnR = 89'401'517'209.0;

inline constexpr std::int64_t kGapTotalNode9_23 = 1263;

} // namespace ref

#endif // COLLATZ_TESTS_REFERENCE_TABLES_HPP
