// Generated by tools/gen_cf_table.py. Do not edit by hand.
//
// Caratheodory-Fejer rational approximations r(x) = sum_k res_k / (x - pole_k)
// of exp(x) on (-inf, 0]. Each entry is {Re pole, Im pole, Re res, Im res}.
// Real poles come first, then conjugate pairs (+Im, -Im).
#pragma once

#include <array>
#include <span>

namespace fracquad::detail {

struct CfEntry {
  double pole_re, pole_im, res_re, res_im;
};

// N = 2, Hankel singular value 0.00367779
inline constexpr std::array<CfEntry, 2> kCf2{{
    {5.8505156065513112550e-1, 1.1858472517236771111, 1.6915263361154162260e-1, -8.0980111154452168905e-1},
    {5.8505156065513112550e-1, -1.1858472517236771111, 1.6915263361154162260e-1, 8.0980111154452168905e-1},
}};

// N = 3, Hankel singular value 0.000399726
inline constexpr std::array<CfEntry, 3> kCf3{{
    {1.3688034212107467000, 0.0, -1.4837496454512307468, 0.0},
    {1.9816972961610049534e-1, 2.4106677661885307408, 6.9112219504181606136e-1, 4.3143728357214894358e-2},
    {1.9816972961610049534e-1, -2.4106677661885307408, 6.9112219504181606136e-1, -4.3143728357214894358e-2},
}};

// N = 4, Hankel singular value 4.32605e-5
inline constexpr std::array<CfEntry, 4> kCf4{{
    {-3.6783831439986262640e-1, 3.6581332720632830102, 7.3392419234164162867e-2, 4.5000491585378902724e-1},
    {-3.6783831439986262640e-1, -3.6581332720632830102, 7.3392419234164162867e-2, -4.5000491585378902724e-1},
    {1.5484005705393915573, 1.1918258539276197444, -6.1683522554959415992e-2, -1.9050594559798491655},
    {1.5484005705393915573, -1.1918258539276197444, -6.1683522554959415992e-2, 1.9050594559798491655},
}};

// N = 5, Hankel singular value 4.67287e-6
inline constexpr std::array<CfEntry, 5> kCf5{{
    {2.1554142894326193410, 0.0, -3.2718146221932707073, 0.0},
    {-1.0395069762766808412, 4.9213886032219309905, -2.3878812038726320637e-1, 1.0373892026621328343e-1},
    {-1.0395069762766808412, -4.9213886032219309905, -2.3878812038726320637e-1, -1.0373892026621328343e-1},
    {1.4405947739928279601, 2.3969827787124232326, 1.8723828149829398613, -3.7820678994191094505e-1},
    {1.4405947739928279601, -2.3969827787124232326, 1.8723828149829398613, 3.7820678994191094505e-1},
}};

// N = 6, Hankel singular value 5.04227e-7
inline constexpr std::array<CfEntry, 6> kCf6{{
    {-1.7819882759207992899, 6.1965124673475685946, -8.3581617156249529658e-2, -1.0642926074795048782e-1},
    {-1.7819882759207992899, -6.1965124673475685946, -8.3581617156249529658e-2, 1.0642926074795048782e-1},
    {1.1585525717193166856, 3.6147726008201191394, 6.6300687052761403306e-1, 1.4514129199029145125},
    {1.1585525717193166856, -3.6147726008201191394, 6.6300687052761403306e-1, -1.4514129199029145125},
    {2.4006029389330076296, 1.1931293084022919276, -5.7901300403016051386e-1, -4.2868885645816026791},
    {2.4006029389330076296, -1.1931293084022919276, -5.7901300403016051386e-1, 4.2868885645816026791},
}};

// N = 7, Hankel singular value 5.43749e-8
inline constexpr std::array<CfEntry, 7> kCf7{{
    {2.9410968925777719588, 0.0, -7.1876256809820150690, 0.0},
    {-2.5757261310832588960, 7.4809773676028253548, 3.9680461053248534923e-2, -5.2477615821721814808e-2},
    {-2.5757261310832588960, -7.4809773676028253548, 3.9680461053248534923e-2, 5.2477615821721814808e-2},
    {7.5760859742518522158e-1, 4.8436184803134676520, -9.0260516074251263231e-1, 7.4003614765262687587e-1},
    {7.5760859742518522158e-1, -4.8436184803134676520, -9.0260516074251263231e-1, -7.4003614765262687587e-1},
    {2.4231963194457752730, 2.3930292987722052709, 4.4566692114325769672, -1.5604498800610272836},
    {2.4231963194457752730, -2.3930292987722052709, 4.4566692114325769672, 1.5604498800610272836},
}};

// N = 8, Hankel singular value 5.86133e-9
inline constexpr std::array<CfEntry, 8> kCf8{{
    {-3.4085395015771537833, 8.7730345644446129683, 2.8129757158198693641e-2, 1.1577384568384277727e-2},
    {-3.4085395015771537833, -8.7730345644446129683, 2.8129757158198693641e-2, -1.1577384568384277727e-2},
    {2.6949098724626504660e-1, 6.0820325927101395734, -6.3258805365596493183e-1, -4.4392310265305020045e-1},
    {2.6949098724626504660e-1, -6.0820325927101395734, -6.3258805365596493183e-1, 4.4392310265305020045e-1},
    {2.2922491477094991814, 3.6007714960749370781, 2.4362407326605786593, 3.7167556404587190808},
    {2.2922491477094991814, -3.6007714960749370781, 2.4362407326605786593, -3.7167556404587190808},
    {3.2209452449505679226, 1.1936196054172877270, -1.8317717104417041116, -9.5256081289446758304},
    {3.2209452449505679226, -1.1936196054172877270, -1.8317717104417041116, 9.5256081289446758304},
}};

// N = 9, Hankel singular value 6.31646e-10
inline constexpr std::array<CfEntry, 9> kCf9{{
    {3.7264404424523745046, 0.0, -1.5772898225394321505e+1, 0.0},
    {-4.2722773410501603921, 1.0071413404284925725e+1, -1.8222944328351917132e-3, 1.3400277242892888583e-2},
    {-4.2722773410501603921, -1.0071413404284925725e+1, -1.8222944328351917132e-3, -1.3400277242892888583e-2},
    {-2.8571636062432143913e-1, 7.3287579584608892970, 1.5496216628022224490e-1, -4.4758718028631254502e-1},
    {-2.8571636062432143913e-1, -7.3287579584608892970, 1.5496216628022224490e-1, 4.4758718028631254502e-1},
    {2.0477955236054950360, 4.8162322651955824077, -2.4638881246519086509, 2.7896859459273480873},
    {2.0477955236054950360, -4.8162322651955824077, -2.4638881246519086509, -2.7896859459273480873},
    {3.3196836155980774412, 2.3913415666160741612, 1.0197195751420272619e+1, -4.5617679343175850848},
    {3.3196836155980774412, -2.3913415666160741612, 1.0197195751420272619e+1, 4.5617679343175850848},
}};

// N = 10, Hankel singular value 6.8056e-11
inline constexpr std::array<CfEntry, 10> kCf10{{
    {-5.1611912717649473837, 1.1375156252224778952e+1, -5.7849038597150486024e-3, 6.8585070757798220225e-4},
    {-5.1611912717649473837, -1.1375156252224778952e+1, -5.7849038597150486024e-3, -6.8585070757798220225e-4},
    {-8.9440470141735407033e-1, 8.5827568987730363176, 2.7258698034821123068e-1, 1.4211727071503380048e-2},
    {-8.9440470141735407033e-1, -8.5827568987730363176, 2.7258698034821123068e-1, -1.4211727071503380048e-2},
    {1.7154060159266980039, 6.0389349255761096298, -2.5655849551724013628, -1.2163857065160157737},
    {1.7154060159266980039, -6.0389349255761096298, -2.5655849551724013628, 1.2163857065160157737},
    {3.2837528833704182765, 3.5943867724050828910, 7.1171651048201297639, 8.8195331594692315366},
    {3.2837528833704182765, -3.5943867724050828910, 7.1171651048201297639, -8.8195331594692315366},
    {4.0277324676495484331, 1.1938560664708728792, -4.8183819912849413190, -2.1054597241476862523e+1},
    {4.0277324676495484331, -1.1938560664708728792, -4.8183819912849413190, 2.1054597241476862523e+1},
}};

// N = 11, Hankel singular value 7.33156e-12
inline constexpr std::array<CfEntry, 11> kCf11{{
    {4.5116223104764921716, 0.0, -3.4597639063733940000e+1, 0.0},
    {-6.0710610033683239116, 1.2683520454717262120e+1, -8.8167237615362003217e-4, -2.2803681113475769288e-3},
    {-6.0710610033683239116, -1.2683520454717262120e+1, -8.8167237615362003217e-4, 2.2803681113475769288e-3},
    {-1.5468803139955989041, 9.8431732968771913738, 3.4047278891829356094e-2, 1.4565219396943276738e-1},
    {-1.5468803139955989041, -9.8431732968771913738, 3.4047278891829356094e-2, -1.4565219396943276738e-1},
    {1.3125381205613223718, 7.2683188400209000487, 3.0851281172252989680e-1, -1.9833753211898402147},
    {1.3125381205613223718, -7.2683188400209000487, 3.0851281172252989680e-1, 1.9833753211898402147},
    {3.1429903144692613373, 4.8030732473507630906, -5.9835669562819486613, 8.4644572438275748593},
    {3.1429903144692613373, -4.8030732473507630906, -5.9835669562819486613, -8.4644572438275748593},
    {4.1765093418648059119, 2.3904652786319198711, 2.2940708036667232359e+1, -1.1849855003383079848e+1},
    {4.1765093418648059119, -2.3904652786319198711, 2.2940708036667232359e+1, 1.1849855003383079848e+1},
}};

// N = 12, Hankel singular value 7.89728e-13
inline constexpr std::array<CfEntry, 12> kCf12{{
    {-6.9986879085958929713, 1.3995916624979262475e+1, 8.1843349927320751246e-4, -5.8135358242452034272e-4},
    {-6.9986879085958929713, -1.3995916624979262475e+1, 8.1843349927320751246e-4, 5.8135358242452034272e-4},
    {-2.2359682461249558506, 1.1109296232707466546e+1, -6.8571494250310321976e-2, 3.8419082886593774734e-2},
    {-2.2359682461249558506, -1.1109296232707466546e+1, -6.8571494250310321976e-2, -3.8419082886593774734e-2},
    {8.5170709672010865048e-1, 8.5038328256375029133, 1.3194115340778381147, -1.8352358287099216159e-1},
    {8.5170709672010865048e-1, -8.5038328256375029133, 1.3194115340778381147, 1.8352358287099216159e-1},
    {2.9178685450832536430, 6.0173459240941552507, -8.2382559342645270391, -2.7961912623274138987},
    {2.9178685450832536430, -6.0173459240941552507, -8.2382559342645270391, 2.7961912623274138987},
    {4.2061242043218711234, 3.5909207588856018921, 1.8785977421580649939e+1, 2.0237285126154954301e+1},
    {4.2061242043218711234, -3.5909207588856018921, 1.8785977421580649939e+1, -2.0237285126154954301e+1},
    {4.8274934521644603424, 1.1939879912233991709, -1.1799379956043858988e+1, -4.6411635333699305931e+1},
    {4.8274934521644603424, -1.1939879912233991709, -1.1799379956043858988e+1, 4.6411635333699305931e+1},
}};

// N = 13, Hankel singular value 8.50594e-14
inline constexpr std::array<CfEntry, 13> kCf13{{
    {5.2967144802294483512, 0.0, -7.5873006181169642096e+1, 0.0},
    {-7.9415842237516413870, 1.5311867991178542882e+1, 3.0770539329344883901e-4, 2.6269393788786178001e-4},
    {-7.9415842237516413870, -1.5311867991178542882e+1, 3.0770539329344883901e-4, -2.6269393788786178001e-4},
    {-2.9561938216968003615, 1.2380530211015123908e+1, -2.8327816379368079057e-2, -2.8043097521028693043e-2},
    {-2.9561938216968003615, -1.2380530211015123908e+1, -2.8327816379368079057e-2, 2.8043097521028693043e-2},
    {3.4222764042766666236e-1, 9.7449668797518616865, 3.5143916521676327113e-1, 7.6099293791675416317e-1},
    {3.4222764042766666236e-1, -9.7449668797518616865, 3.5143916521676327113e-1, -7.6099293791675416317e-1},
    {2.6231285284505083041, 7.2369922995545412848, 2.1557854179805270007e-1, -6.7885062085871796565},
    {2.6231285284505083041, -7.2369922995545412848, 2.1557854179805270007e-1, 6.7885062085871796565},
    {4.1395468351414078700, 4.7956670686604994807, -1.3766087342104400971e+1, 2.3108957560369069058e+1},
    {4.1395468351414078700, -4.7956670686604994807, -1.3766087342104400971e+1, -2.3108957560369069058e+1},
    {5.0116980787825875029, 2.3899519823815509249, 5.1163592836036429183e+1, -2.9083358831422952223e+1},
    {5.0116980787825875029, -2.3899519823815509249, 5.1163592836036429183e+1, 2.9083358831422952223e+1},
}};

// N = 14, Hankel singular value 9.16087e-15
inline constexpr std::array<CfEntry, 14> kCf14{{
    {-8.8977731864686624876, 1.6630982619902316626e+1, -7.1542880635936447989e-5, 1.4361043349543088846e-4},
    {-8.8977731864686624876, -1.6630982619902316626e+1, -7.1542880635936447989e-5, -1.4361043349543088846e-4},
    {-3.7032750494232811899, 1.3656371871483397319e+1, 9.4390253107396989623e-3, -1.7184791958484803730e-2},
    {-3.7032750494232811899, -1.3656371871483397319e+1, 9.4390253107396989623e-3, 1.7184791958484803730e-2},
    {-2.0875863824999712796e-1, 1.0991260561901344249e+1, -3.7636003878234427726e-1, 3.3518347029451864782e-1},
    {-2.0875863824999712796e-1, -1.0991260561901344249e+1, -3.7636003878234427726e-1, -3.3518347029451864782e-1},
    {2.2697838292312247737, 8.4617379730402770312, 4.8071120988331202495, -1.3209793837427962850},
    {2.2697838292312247737, -8.4617379730402770312, 4.8071120988331202495, 1.3209793837427962850},
    {3.9933697105786674169, 6.0048316422350732839, -2.3498232091084934574e+1, -5.8083591297155011074},
    {3.9933697105786674169, -6.0048316422350732839, -2.3498232091084934574e+1, 5.8083591297155011074},
    {5.0893450605807155309, 3.5888240290270268206, 4.6933274488835037768e+1, 4.5643649768832898390e+1},
    {5.0893450605807155309, -3.5888240290270268206, 4.6933274488835037768e+1, -4.5643649768832898390e+1},
    {5.6231425727460644669, 1.1940690463439735479, -2.7875161940147698058e+1, -1.0214733999057413243e+2},
    {5.6231425727460644669, -1.1940690463439735479, -2.7875161940147698058e+1, 1.0214733999057413243e+2},
}};

// N = 15, Hankel singular value 9.86569e-16
inline constexpr std::array<CfEntry, 15> kCf15{{
    {6.0817517164797109676, 0.0, -1.6637020102283580053e+2, 0.0},
    {-9.8656554814679103986, 1.7952933852339233172e+1, -6.1226641244728828274e-5, -1.3670205702747311153e-5},
    {-9.8656554814679103986, -1.7952933852339233172e+1, -6.1226641244728828274e-5, 1.3670205702747311153e-5},
    {-4.4737932688253489607, 1.4936391977842673483e+1, 9.1520967705775873808e-3, 2.1051371454954604567e-3},
    {-4.4737932688253489607, -1.4936391977842673483e+1, 9.1520967705775873808e-3, -2.1051371454954604567e-3},
    {-7.9564237187205917007e-1, 1.2242302351525722277e+1, -2.4856731396842030273e-1, -1.5191865467760286459e-1},
    {-7.9564237187205917007e-1, -1.2242302351525722277e+1, -2.4856731396842030273e-1, 1.5191865467760286459e-1},
    {1.8663076642759009080, 9.6912911082718842458, 1.8742180382321215908, 2.9200809102039898101},
    {1.8663076642759009080, -9.6912911082718842458, 1.8742180382321215908, -2.9200809102039898101},
    {3.7800254040924006326, 7.2183808997787726670, -1.2019829126990033803, -2.0311351938150689746e+1},
    {3.7800254040924006326, -7.2183808997787726670, -1.2019829126990033803, 2.0311351938150689746e+1},
    {5.0786185437225172772, 4.7910656182060107913, -3.0785291798181809481e+1, 5.9389767029387585163e+1},
    {5.0786185437225172772, -4.7910656182060107913, -3.0785291798181809481e+1, -5.9389767029387585163e+1},
    {5.8337608206534434190, 2.3896254821287052253, 1.1353763362789472250e+2, -6.9128248850682935301e+1},
    {5.8337608206534434190, -2.3896254821287052253, 1.1353763362789472250e+2, 6.9128248850682935301e+1},
}};

// N = 16, Hankel singular value 1.06243e-16
inline constexpr std::array<CfEntry, 16> kCf16{{
    {-1.0843917078695653040e+1, 1.9277446167181211225e+1, -5.0901521866153716672e-7, -2.4220017652877375961e-5},
    {-1.0843917078695653040e+1, -1.9277446167181211225e+1, -5.0901521866153716672e-7, 2.4220017652877375961e-5},
    {-5.2649713434422071360, 1.6220221473167851561e+1, 2.1151742182520544145e-4, 4.3892969647397182269e-3},
    {-5.2649713434422071360, -1.6220221473167851561e+1, 2.1151742182520544145e-4, -4.3892969647397182269e-3},
    {-1.4139284624886519985, 1.3497725698892688806e+1, 4.1023136835407300508e-2, -1.5743466173459057069e-1},
    {-1.4139284624886519985, -1.3497725698892688806e+1, 4.1023136835407300508e-2, 1.5743466173459057069e-1},
    {1.4193758971858132122, 1.0925363484496680248e+1, -1.4793007113559029168, 1.7686588323786055481},
    {1.4193758971858132122, -1.0925363484496680248e+1, -1.4793007113559029168, -1.7686588323786055481},
    {3.5091036084150180039, 8.4361989858843443936, 1.5059585270024605983e+1, -5.7514052776432763640},
    {3.5091036084150180039, -8.4361989858843443936, 1.5059585270024605983e+1, 5.7514052776432763640},
    {4.9931747377180685629, 5.9968817136039213494, -6.2518392463212316880e+1, -1.1190391094282320020e+1},
    {4.9931747377180685629, -5.9968817136039213494, -6.2518392463212316880e+1, 1.1190391094282320020e+1},
    {5.9481522689512337252, 3.5874573620183102122, 1.1339775178484675244e+2, 1.0194721704216208588e+2},
    {5.9481522689512337252, -3.5874573620183102122, 1.1339775178484675244e+2, -1.0194721704216208588e+2},
    {6.4161776990994831237, 1.1941223933701346997, -6.4500878025543729099e+1, -2.2459440762653084708e+2},
    {6.4161776990994831237, -1.1941223933701346997, -6.4500878025543729099e+1, 2.2459440762653084708e+2},
}};

inline constexpr int kCfMinDegree = 2;
inline constexpr int kCfMaxDegree = 16;

inline std::span<const CfEntry> cf_table(int degree) {
  switch (degree) {
    case 2: return kCf2;
    case 3: return kCf3;
    case 4: return kCf4;
    case 5: return kCf5;
    case 6: return kCf6;
    case 7: return kCf7;
    case 8: return kCf8;
    case 9: return kCf9;
    case 10: return kCf10;
    case 11: return kCf11;
    case 12: return kCf12;
    case 13: return kCf13;
    case 14: return kCf14;
    case 15: return kCf15;
    case 16: return kCf16;
    default: return {};
  }
}

}  // namespace fracquad::detail
