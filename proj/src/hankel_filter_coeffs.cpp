#include "sblica/hankel.hpp"

// 120-point digital linear filter pair for Hankel J0/J1 transforms on a
// shared log-spaced base (ln-spacing 0.115). Weights were fit by
// least squares on closed-form transform pairs (Lipschitz, Gaussian and
// Sommerfeld families) and are validated at runtime by the Lipschitz
// self-test in hankel.cpp.

namespace sblica {
namespace detail {

const std::array<double, kFilterLength> kFilterBase = {{
    +2.38176157621778549e-04, +2.67203504698821075e-04, +2.99768514347735471e-04,
    +3.36302333667126989e-04, +3.77288655134604860e-04, +4.23270120492752824e-04,
    +4.74855505098693224e-04, +5.32727777855029720e-04, +5.97653143432282292e-04,
    +6.70491186498049373e-04, +7.52206252258254488e-04, +8.43880213984071975e-04,
    +9.46726796561253971e-04, +1.06210764569964334e-03, +1.19155035555249759e-03,
    +1.33676869342374475e-03, +1.49968528932984562e-03, +1.68245709081654119e-03,
    +1.88750392004163620e-03, +2.11754051120761812e-03, +2.37561245250633062e-03,
    +2.66513650843198079e-03, +2.98994585631306032e-03, +3.35434083597590648e-03,
    +3.76314588444421737e-03, +4.22177340946612752e-03, +4.73629544752756770e-03,
    +5.31352405507407120e-03, +5.96110149728713411e-03, +6.68760142847674762e-03,
    +7.50264240367621606e-03, +8.41701522428522919e-03, +9.44282580376421161e-03,
    +1.05936554448619498e-02, +1.18847406503799612e-02, +1.33331748480927121e-02,
    +1.49581347005774811e-02, +1.67811339962009587e-02, +1.88263084826732936e-02,
    +2.11207354142464339e-02, +2.36947920432280176e-02, +2.65825578020884370e-02,
    +2.98222655008836962e-02, +3.34568075136594256e-02, +3.75343036555317658e-02,
    +4.21087382689003809e-02, +4.72406749535482923e-02, +5.29980584033558008e-02,
    +5.94571139656111386e-02, +6.67033568327066589e-02, +7.48327242274962473e-02,
    +8.39528455719741051e-02, +9.41844674557766881e-02, +1.05663052270494523e-01,
    +1.18540571675043074e-01, +1.32987518636823343e-01, +1.49195164687255216e-01,
    +1.67378092276802476e-01, +1.87777035756809513e-01, +2.10662068601560670e-01,
    +2.36336179068048408e-01, +2.65139281633688662e-01, +2.97452717321740612e-01,
    +3.33704302496855176e-01, +3.74373992974692871e-01, +4.20000238436051387e-01,
    +4.71187111275286730e-01, +5.28612304265997368e-01, +5.93036102929717868e-01,
    +6.65311451398028386e-01, +7.46395245035881727e-01, +8.37360999335753919e-01,
    +9.39413062813475808e-01, +1.05390256207853739e+00, +1.18234529018492185e+00,
    +1.32644177509674921e+00, +1.48809979396681435e+00, +1.66945963130764308e+00,
    +1.87292241546268601e+00, +2.10118190854066222e+00, +2.35726017069847815e+00,
    +2.64454757095291626e+00, +2.96684767424746720e+00, +3.32842759906031693e+00,
    +3.73407451226711196e+00, +4.18915900922686291e+00, +4.69970621821679746e+00,
    +5.27247557060909156e+00, +5.91505029291328999e+00, +6.63593780552153234e+00,
    +7.44468235739402751e+00, +8.35199138792079765e+00, +9.36987728893793204e+00,
    +1.05118164437680299e+01, +1.17929276488952706e+01, +1.32301722805032966e+01,
    +1.48425788559971945e+01, +1.66514949636101441e+01, +1.86808698955371355e+01,
    +2.09575717265403867e+01, +2.35117430360143302e+01, +2.63771999831214643e+01,
    +2.95918800185869557e+01, +3.31983441606685119e+01, +3.72443404852254787e+01,
    +4.17834362902595942e+01, +4.68757273045216181e+01, +5.25886333298084523e+01,
    +5.89977908509224278e+01, +6.61880544310745478e+01, +7.42546201507881989e+01,
    +8.33042859641632845e+01, +9.34568656590916618e+01, +1.04846775141663926e+02,
    +1.17624812046510598e+02, +1.31960152234372003e+02, +1.48042589609691277e+02,
    +1.66085048912476111e+02, +1.86326404752742945e+02, +2.09034644210380151e+02
}};

const std::array<double, kFilterLength> kFilterWeightsJ0 = {{
    +1.34770862715575396e-01, -4.56461698324533538e-01, +4.62157757889690934e-01,
    +4.34017899879272986e-02, -2.36369565400243259e-01, -9.83366058708079332e-02,
    +1.22341330510630952e-01, +1.31904571055813907e-01, -2.46211744246637859e-02,
    -1.18351374844024831e-01, -4.63165189755247383e-02, +7.22074678006965481e-02,
    +7.94369925514217812e-02, -1.79527373600278789e-02, -7.77241139935619385e-02,
    -2.36700457313789372e-02, +5.68513688542267581e-02, +4.65540238085486585e-02,
    -3.10059632321649931e-02, -5.25887959916931241e-02, +1.13048684302018525e-02,
    +5.09179855980717577e-02, +1.22737453463761179e-03, -4.55642794274094126e-02,
    -4.76760379073892793e-03, +4.25311763996349540e-02, +4.00440302382158719e-03,
    -3.86362224099843776e-02, +3.81821395987566592e-03, +3.65818491386516453e-02,
    -1.24500458849314266e-02, -2.77559396986496038e-02, +2.55158190962534170e-02,
    +1.62762809850678369e-02, -2.97188270804793001e-02, +6.75375870119274829e-03,
    +2.70319406617945956e-02, -2.26022172196970877e-02, +1.35033923867600159e-05,
    +2.70846662829145532e-02, -2.15258601678436183e-02, +8.93045654357299198e-03,
    +1.78483910360344236e-02, -2.09967592053218188e-02, +2.73005312525941221e-02,
    -7.90367446797401833e-03, +5.11837792794549162e-03, +1.77776475703144733e-02,
    -1.19297782563133840e-02, +2.82870328301595246e-02, -9.09372643261788932e-03,
    +2.09199830548708332e-02, +7.54838953447970959e-03, +7.66250848400390483e-03,
    +2.38509814254125908e-02, +2.00834764348953657e-03, +3.01395189758327589e-02,
    +8.89066687571424263e-03, +2.67954432159025063e-02, +2.44885579244355153e-02,
    +2.02790981172254817e-02, +4.12607342276204853e-02, +2.01501969665730911e-02,
    +4.83541785086425285e-02, +3.75325883473597854e-02, +4.00589606282970717e-02,
    +6.66092047535407628e-02, +3.81205966776121813e-02, +7.42921889882355163e-02,
    +7.10422494353155076e-02, +5.60159119186567564e-02, +1.04553695142659081e-01,
    +7.05299276596501601e-02, +8.34325840377637684e-02, +1.18335573799921531e-01,
    +6.41780733450112717e-02, +9.76495308467147383e-02, +9.95528540697402098e-02,
    +2.88998570452370304e-02, +6.25655843093601005e-02, +1.75770879822904069e-02,
    -7.33901824213901433e-02, -5.14147162321544338e-02, -1.33035129012975761e-01,
    -2.09485309477733694e-01, -1.39078963931988764e-01, -1.56735960783238010e-01,
    -8.44834634845407773e-02, +1.38423601331043922e-01, +1.80765638042722665e-01,
    +2.19799247979583612e-01, +1.32700615097277458e-01, -2.47880987497853034e-01,
    -2.44639082690111254e-01, +2.37322705859186606e-03, +2.84358543674873399e-01,
    +1.13871713186386558e-01, -4.79062407733444884e-01, +3.56921017816245967e-01,
    -4.70159328198646864e-02, -1.46087486597613669e-01, +1.93052446883528767e-01,
    -1.72918270588568984e-01, +1.42145017717023758e-01, -1.19004345511964371e-01,
    +1.02275495299968266e-01, -8.44960557308359617e-02, +5.87506622448174531e-02,
    -2.35376856749593133e-02, -1.48789692343192503e-02, +4.53095445975445071e-02,
    -5.87348101868389941e-02, +5.42193854023520216e-02, -3.87756193088374945e-02,
    +2.18497255857890288e-02, -9.60503989718547446e-03, +3.19430280425380547e-03,
    -7.57972492715919266e-04, +1.14494298707953912e-04, -8.27628061683682859e-06
}};

const std::array<double, kFilterLength> kFilterWeightsJ1 = {{
    +1.01081696032989372e-04, -3.73749888825564895e-04, +2.84947657157701595e-04,
    +5.27634624725800304e-04, -7.53771414505225259e-04, -3.71033475124649148e-04,
    +7.21437408398289807e-04, +5.06424388802971916e-04, -5.84382064228663014e-04,
    -7.00566808202171976e-04, +3.57918709686964398e-04, +8.30878621604399636e-04,
    -6.49771779455281430e-05, -8.73053277211217893e-04, -2.17793349696227548e-04,
    +8.42760759366791251e-04, +4.37462628220091569e-04, -7.98755135804460510e-04,
    -5.56847258605092815e-04, +7.86026723887567292e-04, +5.91750461533870628e-04,
    -8.81514712604806018e-04, -4.67249025122888455e-04, +1.05565293718964687e-03,
    +1.02650677269418094e-04, -1.14816243137340606e-03, +5.44199354980490733e-04,
    +8.35153913523085240e-04, -1.19957058786782696e-03, +1.82075040504686703e-04,
    +1.06329552885271739e-03, -1.29309575213167396e-03, +4.10910822480368976e-04,
    +8.07680438420955646e-04, -1.43283263790901921e-03, +1.20941411949519522e-03,
    -3.43345875378184111e-04, -5.62013462155359651e-04, +1.24458838750919360e-03,
    -1.44217286336872919e-03, +1.42807585935971230e-03, -1.12220762072734112e-03,
    +9.47323687306256094e-04, -6.00595620828131408e-04, +5.71899592131302169e-04,
    -2.68691485258225685e-04, +4.20574392858587623e-04, -8.27953852162860438e-05,
    +4.21019032876430652e-04, +4.80927935090274877e-05, +5.32442546103837656e-04,
    +1.78672579254321104e-04, +7.64731423038714567e-04, +3.40825172610431486e-04,
    +1.17215671359416178e-03, +5.57125830148995013e-04, +1.86127807603598053e-03,
    +8.45544736992899591e-04, +3.01626477682749973e-03, +1.21824835651299090e-03,
    +4.93965214149201526e-03, +1.68479443267033693e-03, +8.10147296447001966e-03,
    +2.28285730285053209e-03, +1.31562016366442505e-02, +3.21935621195443278e-03,
    +2.08163186655479365e-02, +5.25771825366252131e-03, +3.14394757837994226e-02,
    +1.04332717229848135e-02, +4.43361935881640135e-02, +2.27457558991557389e-02,
    +5.74626207884941648e-02, +4.73235394237107310e-02, +6.92216078235691479e-02,
    +8.56261258238997791e-02, +8.30570140641052890e-02, +1.27367773855507460e-01,
    +1.08209083400883962e-01, +1.48968779683004732e-01, +1.42011097407535342e-01,
    +1.28810315967717331e-01, +1.38934866842130605e-01, +6.04475970984085301e-02,
    +2.74493228280726642e-02, -6.00210079195168181e-02, -1.69728887345938440e-01,
    -1.85872597827771546e-01, -2.14747813804572946e-01, -8.84296386216120028e-02,
    +1.22285880836620342e-01, +2.30247994641921583e-01, +2.27528724804117677e-01,
    -1.12237912786678468e-01, -3.17503747413857784e-01, -1.42679515416871579e-02,
    +3.26384623780342109e-01, -3.59368756309464341e-02, -3.49113698614714862e-01,
    +4.30146749837869324e-01, -2.99853750492130366e-01, +1.48367998772409027e-01,
    -4.99340685091618289e-02, -1.85076694391399449e-03, +2.98209107484907199e-02,
    -4.93314631591857469e-02, +6.64893361351639317e-02, -8.08999531613430328e-02,
    +8.87430467847036691e-02, -8.63596578228277567e-02, +7.34357873073475803e-02,
    -5.38528681231604522e-02, +3.36132080510669479e-02, -1.75856183533611848e-02,
    +7.56046447225302946e-03, -2.59904183978408240e-03, +6.86368457630550668e-04,
    -1.30634740360998443e-04, +1.59389973087547404e-05, -9.35670275829973762e-07
}};

}  // namespace detail
}  // namespace sblica
