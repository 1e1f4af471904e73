#pragma once

/// Published coefficient tables of the four counting series, used by the
/// self-check command. Index i holds the coefficient of t^(i+1) for the
/// diagram series and of t^(6(i+1)) for the map series.

#include <array>
#include <cstdint>
#include <string_view>

namespace trivalent::series {

/// A005133: rooted trivalent diagrams (index-n subgroups of PSL2(Z)), n = 1..50.
inline constexpr std::array<std::uint64_t, 50> rooted_diagrams{
    1ULL, 1ULL, 4ULL, 8ULL, 5ULL,
    22ULL, 42ULL, 40ULL, 120ULL, 265ULL,
    286ULL, 764ULL, 1729ULL, 2198ULL, 5168ULL,
    12144ULL, 17034ULL, 37702ULL, 88958ULL, 136584ULL,
    288270ULL, 682572ULL, 1118996ULL, 2306464ULL, 5428800ULL,
    9409517ULL, 19103988ULL, 44701696ULL, 80904113ULL, 163344502ULL,
    379249288ULL, 711598944ULL, 1434840718ULL, 3308997062ULL, 6391673638ULL,
    12921383032ULL, 29611074174ULL, 58602591708ULL, 119001063028ULL, 271331133136ULL,
    547872065136ULL, 1119204224666ULL, 2541384297716ULL, 5219606253184ULL, 10733985041978ULL,
    24300914061436ULL, 50635071045768ULL, 104875736986272ULL, 236934212877684ULL, 499877970985660ULL,
};

/// A121350: unrooted trivalent diagrams (conjugacy classes), n = 1..50.
inline constexpr std::array<std::uint64_t, 50> unrooted_diagrams{
    1ULL, 1ULL, 2ULL, 2ULL, 1ULL,
    8ULL, 6ULL, 7ULL, 14ULL, 27ULL,
    26ULL, 80ULL, 133ULL, 170ULL, 348ULL,
    765ULL, 1002ULL, 2176ULL, 4682ULL, 6931ULL,
    13740ULL, 31085ULL, 48652ULL, 96682ULL, 217152ULL,
    362779ULL, 707590ULL, 1597130ULL, 2789797ULL, 5449439ULL,
    12233848ULL, 22245655ULL, 43480188ULL, 97330468ULL, 182619250ULL,
    358968639ULL, 800299302ULL, 1542254973ULL, 3051310056ULL, 6783358130ULL,
    13362733296ULL, 26648120027ULL, 59101960412ULL, 118628268978ULL, 238533003938ULL,
    528281671324ULL, 1077341937144ULL, 2184915316390ULL, 4835392099548ULL, 9997568771074ULL,
};

/// A062980: rooted triangular maps with 6k arcs, k = 1..20.
inline constexpr std::array<std::string_view, 20> rooted_maps{
    "5",
    "60",
    "1105",
    "27120",
    "828250",
    "30220800",
    "1282031525",
    "61999046400",
    "3366961243750",
    "202903221120000",
    "13437880555850250",
    "970217083619328000",
    "75849500508999712500",
    "6383483988812390400000",
    "575440151532675686278125",
    "55318762960656722780160000",
    "5649301494178851172304968750",
    "610768380520654474629120000000",
    "69692599846542054607811528918750",
    "8370071726919812448859648819200000",
};

/// A129114: unrooted triangular maps with 6k arcs, k = 1..20.
inline constexpr std::array<std::string_view, 20> unrooted_maps{
    "3",
    "11",
    "81",
    "1228",
    "28174",
    "843186",
    "30551755",
    "1291861997",
    "62352938720",
    "3381736322813",
    "203604398647922",
    "13475238697911184",
    "972429507963453210",
    "75993857157285258473",
    "6393779463050776636807",
    "576237114190853665462712",
    "55385308766655472416299110",
    "5655262782600929403228668176",
    "611338595145132827847686253456",
    "69750597724332100283681465962492",
};

} // namespace trivalent::series
