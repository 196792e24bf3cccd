#pragma once

// Degree-74 parametric solution, coefficient lists c0..c74 (c0 multiplies u^74).

#include <array>
#include <cstdint>

namespace biquad::data {

inline constexpr std::array<std::int64_t, 75> golden74_x = {
    1, 17, 152, 895, 3677,
    10355, 16752, -6222, -140835, -557833,
    -1711920, -5515487, -19959999, -72345519, -238033554,
    -685646800, -1714953501, -3721974065, -7015296151, -11517835142,
    -16609064411, -21365615196, -24731053881, -23868601209, -8693923546,
    47765761580, 205456220674, 601739916040, 1591967993962, 4095994601060,
    10211819410484, 23927266424288, 51389141908972, 99959111822592, 175616228744844,
    279322120088436, 404232436053368, 535981332047440, 656753805669640, 750917495762848,
    807744919686856, 817770961417232, 764169978445936, 616307330131792, 334329090096416,
    -111838755728688, -716177198849232, -1418334840709488, -2107891661329696, -2654267430853920,
    -2950439684299520, -2949879928244256, -2679452870276352, -2224041503518848, -1692791544749664,
    -1183811970766368, -761319578137344, -450268872381568, -244732999149312, -122074267257536,
    -55765072370368, -23264034935872, -8831153717696, -3036512628032, -940331642368,
    -260402502784, -63912753024, -13745943296, -2552757120, -401389312,
    -52002816, -5334272, -406528, -20480, -512,
};

inline constexpr std::array<std::int64_t, 75> golden74_y = {
    1, 12, 68, 259, 1071,
    6503, 39416, 188722, 700231, 2055472,
    4846760, 9153077, 13239607, 12076495, -1384546,
    -22264022, 15596517, 361584212, 1706206161, 5768715671,
    16854139347, 45862872154, 118757789579, 289692118217, 652845273382,
    1338294128486, 2475161995622, 4122489145244, 6204532963276, 8511520885474,
    10788548220988, 12827574605276, 14416231656980, 15197532538952, 15046142552324,
    16116160860964, 27435630089032, 71120958059592, 186419869959416, 425938058082816,
    840169049393216, 1452600163713336, 2235386195697664, 3099438534892656, 3908564730337520,
    4515911363877424, 4808784908497216, 4742686437811904, 4350587246441184, 3725781657047328,
    2988512826804672, 2251577528136096, 1596977048727968, 1067985817108224, 673860524037920,
    400989088511520, 224684399069824, 118226429889024, 58200428385216, 26679801745344,
    11327184587264, 4426678166144, 1581511834432, 512578395840, 149388715136,
    38749162752, 8834393088, 1742949248, 291587328, 40234112,
    4398336, 357376, 19200, 512, 0,
};

inline constexpr std::array<std::int64_t, 75> golden74_z = {
    1, 11, 44, -43, -1521,
    -10349, -48094, -184582, -626261, -1885097,
    -4862686, -10139275, -15292077, -10609211, 20915604,
    89748564, 185154453, 355944759, 1120036171, 4531415148,
    16199711507, 48596287898, 126583492119, 297031705531, 643010863626,
    1294952571722, 2416410456570, 4133999002140, 6405227285108, 8887453558722,
    10949047727476, 11952001853080, 11732733780020, 10825910502168, 9623681783220,
    5699607762540, -10738885867128, -61883427411640, -184858984506696, -427986591320912,
    -838134941620800, -1440124815325576, -2214374565389312, -3083234892705296, -3916367237113744,
    -4559139881417136, -4877129937251328, -4800033216891168, -4345979727260704, -3615037502758336,
    -2754878085393536, -1914161146105536, -1203148630872352, -674978585543232, -329583897465504,
    -132419348608032, -36557304494592, 666392821888, 9754035865536, 8470935522944,
    5115912504576, 2515315350400, 1054808007744, 383790993088, 121767258240,
    33629791232, 8030510080, 1638885248, 280917248, 39421056,
    4357376, 356352, 19200, 512, 0,
};

inline constexpr std::array<std::int64_t, 75> golden74_w = {
    1, 18, 158, 891, 3557,
    10197, 19042, 11112, -51283, -81800,
    792900, 6076883, 25876793, 85316469, 244795852,
    646730252, 1593093855, 3592501192, 7198043589, 12441224263,
    18044751915, 21420089180, 20943326583, 20712001441, 34952512262,
    89353280986, 229583243194, 578562542448, 1518227607774, 4064995267080,
    10413927381044, 24448963869396, 51846443160436, 99369704162752, 173128682714556,
    275899919403068, 403984399138728, 544562575159256, 675160917410712, 767365027699696,
    796346654381272, 755106814522256, 667938723818320, 594168862898784, 614577345224672,
    800741879613040, 1178674777272112, 1705240992660656, 2272595710082912, 2742355103542944,
    2995060811603392, 2971951766681280, 2690549300561088, 2229865867200576, 1695948860452832,
    1185506921484768, 762180796885504, 450669693171776, 244900386259584, 122136141687808,
    55785094561728, 23269642319168, 8832494068800, 3036781077824, 940375537408,
    260408140288, 63913287296, 13745976576, 2552758144, 401389312,
    52002816, 5334272, 406528, 20480, 512,
};

}  // namespace biquad::data
