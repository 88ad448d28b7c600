#include "printed_expansions.hpp"

namespace gammaext::printed {

namespace {
constexpr Term kSmallAlphaIData[] = {
    {0, "3"},
    {1, "40"},
    {2, "-153"},
    {3, "160"},
    {4, "145"},
    {5, "40"},
    {6, "5"},
};
}  // namespace
const std::span<const Term> kSmallAlphaI(kSmallAlphaIData);

namespace {
constexpr Term kSmallAlphaQData[] = {
    {0, "240"},
    {2, "416"},
    {4, "152"},
    {6, "8"},
    {8, "92"},
    {10, "58"},
    {12, "3"},
};
}  // namespace
const std::span<const Term> kSmallAlphaQ(kSmallAlphaQData);

namespace {
constexpr Term kCase2JNumeratorData[] = {
    {0, "-1"},
    {1, "1"},
    {2, "9"},
    {3, "38"},
    {4, "-31"},
    {5, "9"},
    {6, "-1"},
};
}  // namespace
const std::span<const Term> kCase2JNumerator(kCase2JNumeratorData);

namespace {
constexpr Term kFPlusOver2wData[] = {
    {0, "-15"},
    {1, "-135"},
    {2, "-345"},
    {3, "190"},
    {4, "1735"},
    {5, "495"},
    {6, "-3615"},
    {7, "-716"},
    {8, "3615"},
    {9, "495"},
    {10, "-1735"},
    {11, "190"},
    {12, "345"},
    {13, "-135"},
    {14, "15"},
};
}  // namespace
const std::span<const Term> kFPlusOver2w(kFPlusOver2wData);

namespace {
constexpr Term kGPlusData[] = {
    {0, "-1140603"},
    {2, "-17129046"},
    {4, "-115786348"},
    {6, "-468301840"},
    {8, "-1267262160"},
    {10, "-2427446688"},
    {12, "-3393664576"},
    {14, "-3517163008"},
    {16, "-2715321600"},
    {18, "-1554209280"},
    {20, "-649507840"},
    {22, "-192286720"},
    {24, "-38154240"},
    {26, "-4546560"},
    {28, "-245760"},
};
}  // namespace
const std::span<const Term> kGPlus(kGPlusData);

namespace {
constexpr Term kHPlusOverWData[] = {
    {0, "-30"},
    {1, "-255"},
    {2, "-600"},
    {3, "410"},
    {4, "2900"},
    {5, "705"},
    {6, "-5550"},
    {7, "-1672"},
    {8, "5550"},
    {9, "705"},
    {10, "-2900"},
    {11, "410"},
    {12, "600"},
    {13, "-255"},
    {14, "30"},
};
}  // namespace
const std::span<const Term> kHPlusOverW(kHPlusOverWData);

namespace {
constexpr Term kIPlusData[] = {
    {0, "-1083048"},
    {2, "-16069911"},
    {4, "-108024568"},
    {6, "-435858040"},
    {8, "-1178745360"},
    {10, "-2259543408"},
    {12, "-3165284416"},
    {14, "-3291555328"},
    {16, "-2553515520"},
    {18, "-1471031040"},
    {20, "-619724800"},
    {22, "-185251840"},
    {24, "-37171200"},
    {26, "-4485120"},
    {28, "-245760"},
};
}  // namespace
const std::span<const Term> kIPlus(kIPlusData);

namespace {
constexpr Term kFMinusOverMinus2wData[] = {
    {0, "-3"},
    {1, "21"},
    {2, "-33"},
    {3, "-56"},
    {4, "130"},
    {5, "94"},
    {6, "-130"},
    {7, "-56"},
    {8, "33"},
    {9, "21"},
    {10, "3"},
};
}  // namespace
const std::span<const Term> kFMinusOverMinus2w(kFMinusOverMinus2wData);

namespace {
constexpr Term kGMinusData[] = {
    {0, "128409"},
    {2, "2102668"},
    {4, "14459888"},
    {6, "56813056"},
    {8, "142035456"},
    {10, "236177408"},
    {12, "264626176"},
    {14, "197525504"},
    {16, "94175232"},
    {18, "25952256"},
    {20, "3145728"},
};
}  // namespace
const std::span<const Term> kGMinus(kGMinusData);

namespace {
constexpr Term kHMinusOverWData[] = {
    {0, "6"},
    {1, "-39"},
    {2, "54"},
    {3, "100"},
    {4, "-200"},
    {5, "-128"},
    {6, "200"},
    {7, "100"},
    {8, "-54"},
    {9, "-39"},
    {10, "-6"},
};
}  // namespace
const std::span<const Term> kHMinusOverW(kHMinusOverWData);

namespace {
constexpr Term kIMinusData[] = {
    {0, "175743"},
    {2, "2666962"},
    {4, "17644496"},
    {6, "67116160"},
    {8, "162604032"},
    {10, "262406144"},
    {12, "286081024"},
    {14, "208437248"},
    {16, "97320960"},
    {18, "26345472"},
    {20, "3145728"},
};
}  // namespace
const std::span<const Term> kIMinus(kIMinusData);

namespace {
constexpr Term kVPlusData[] = {
    {0, "23565171557938261664962395"},
    {2, "1985238765536369188253388462"},
    {4, "76017937191609745093093565184"},
    {6, "1815476155917282265018752272232"},
    {8, "30868042081839055982554050213660"},
    {10, "401897536051918258546845673711320"},
    {12, "4195397709111549929883773768957292"},
    {14, "36238699732610615067411794056699104"},
    {16, "265002286089679374723172860122766982"},
    {18, "1669237124849349342077586449716389470"},
    {20, "9179934813394932229977676436328785920"},
    {22, "44555295354320392501114611345123622400"},
    {24, "192537160208281140648975165919934835200"},
    {26, "746181252269526741637909507751082171520"},
    {28, "2609372572626683435719917787491018652160"},
    {30, "8276209631283583168755734561689661224960"},
    {32, "23913569456882144063241575623509484876800"},
    {34, "63185851825755484161960668172292699909120"},
    {36, "153171842040744452342444666253152790732800"},
    {38, "341628452529444844018632398179833131991040"},
    {40, "702775058219816773204544225960017412751360"},
    {42, "1336281286191807830241756821296507838955520"},
    {44, "2352931028757956298911312671496544634142720"},
    {46, "3842851078067257537573706091171559356497920"},
    {48, "5829597689354288278514821031866786159656960"},
    {50, "8224048629268397888867021111129844469596160"},
    {52, "10800344227796355322915422778734559920914432"},
    {54, "13214925874596962589048294078754839901241344"},
    {56, "15075437985869745487585690312752934894436352"},
    {58, "16043253396277674458218536937392302561689600"},
    {60, "15933483495160554733717977505944446676500480"},
    {62, "14772181225346687498328707734409833005187072"},
    {64, "12786642631638024827680853914736629691449344"},
    {66, "10333607587858511627607426462208954269171712"},
    {68, "7796135691442288431829216828566360534548480"},
    {70, "5489455045169343972022956242977322445045760"},
    {72, "3606053976460179205452292516224406577479680"},
    {74, "2208802483012122361676530694278736018145280"},
    {76, "1260683716848402925787749700503070572544000"},
    {78, "669904634456217504368236284579198848204800"},
    {80, "331081492020125941589702200450146757509120"},
    {82, "152001230583526972614803279225239581491200"},
    {84, "64734238129983061042604032362158017740800"},
    {86, "25531661312772564369272230408940525977600"},
    {88, "9307900274880934185285303838052660019200"},
    {90, "3129622227458365558314112917099983667200"},
    {92, "968033669852811173795309928049750835200"},
    {94, "274640462267821497605095290057418342400"},
    {96, "71224038857339584104332613373237657600"},
    {98, "16816854347488682979216179348688076800"},
    {100, "3598246400042953802386878316412928000"},
    {102, "693860503839280523254707460767744000"},
    {104, "119794916777653504670468143054848000"},
    {106, "18371891299642536871251828277248000"},
    {108, "2478647665316721166509051740160000"},
    {110, "290656583441325139861690122240000"},
    {112, "29171448597603811259616067584000"},
    {114, "2455470675466333890778497024000"},
    {116, "168582129968383522599075840000"},
    {118, "9065459012974557989437440000"},
    {120, "358068461185282678456320000"},
    {122, "9236522547766697656320000"},
    {124, "116733302341443256320000"},
};
}  // namespace
const std::span<const Term> kVPlus(kVPlusData);

namespace {
constexpr Term kVMinusData[] = {
    {0, "1058023271132626023"},
    {2, "51541890229923566472"},
    {4, "1213009372688989850064"},
    {6, "18352820646596071930240"},
    {8, "200442482186879766344000"},
    {10, "1682464063207304317242816"},
    {12, "11285809233594557704985856"},
    {14, "62123650712872430361438720"},
    {16, "286006349074965960756670464"},
    {18, "1116988330180696358380290048"},
    {20, "3741070988530167056939876352"},
    {22, "10836728622922107883411734528"},
    {24, "27330768999389436608140804096"},
    {26, "60330629581678789398471114752"},
    {28, "117040259220868123540341129216"},
    {30, "200169684615441568277429485568"},
    {32, "302487634652646366318853881856"},
    {34, "404485176548048584076188188672"},
    {36, "478958931700928292722105647104"},
    {38, "502214198209105947113507782656"},
    {40, "465950173145939141611449483264"},
    {42, "381911302204202972478305206272"},
    {44, "275855094787796630236532047872"},
    {46, "174972859491619945161380855808"},
    {48, "97001064005371803174963249152"},
    {50, "46708058892337905269349548032"},
    {52, "19376798019028218231165812736"},
    {54, "6852048396846611541188935680"},
    {56, "2036474622748306983572471808"},
    {58, "499070059195604547617685504"},
    {60, "98184545971566239935365120"},
    {62, "14905936080354118622773248"},
    {64, "1639091209276985243074560"},
    {66, "116172982490204328689664"},
    {68, "3984496719921263149056"},
};
}  // namespace
const std::span<const Term> kVMinus(kVMinusData);

}  // namespace gammaext::printed
