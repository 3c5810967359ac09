//! Reference values computed offline with mpmath (see the comment on each table).
#![allow(clippy::excessive_precision, dead_code)]

// M(alpha, beta, x) by direct Taylor summation at 200 digits
pub const M_TABLE: &[(f64, f64, f64, f64)] = &[
    (0.25, 1.0, 0.1, 1.0258011848225249),
    (0.25, 1.0, 1.0, 1.352410455122411),
    (0.25, 1.0, 5.0, 14.80590689883072),
    (0.25, 1.0, 14.0, 47923.436023047793),
    (0.25, 1.0, 29.0, 8.8548874436911056e+10),
    (0.25, 1.0, 31.0, 6.2151791679728933e+11),
    (0.25, 1.0, 55.0, 1.0619177783867458e+22),
    (0.25, 1.0, 80.0, 5.7539076209750458e+32),
    (0.25, 1.0, 200.0, 3.7581316762793011e+84),
    (0.25, 2.0, 0.1, 1.0127653799631431),
    (0.25, 2.0, 1.0, 1.156846135281812),
    (0.25, 2.0, 5.0, 4.1845587767752882),
    (0.25, 2.0, 14.0, 3654.1303811284714),
    (0.25, 2.0, 29.0, 3.1402421939323952e+9),
    (0.25, 2.0, 31.0, 2.0578743655335008e+10),
    (0.25, 2.0, 55.0, 1.9583738741284079e+20),
    (0.25, 2.0, 80.0, 7.2620247464797571e+30),
    (0.25, 2.0, 200.0, 1.8862020973304966e+82),
    (0.5, 1.0, 0.1, 1.0519282434815817),
    (0.5, 1.0, 1.0, 1.7533876543770904),
    (0.5, 1.0, 5.0, 40.078445504076508),
    (0.5, 1.0, 14.0, 184885.67038143758),
    (0.5, 1.0, 29.0, 4.1557508742079976e+11),
    (0.5, 1.0, 31.0, 2.9682261727139459e+12),
    (0.5, 1.0, 55.0, 5.881006028448947e+22),
    (0.5, 1.0, 80.0, 3.5060105392264624e+33),
    (0.5, 1.0, 200.0, 2.8863703699933783e+85),
    (0.5, 2.0, 0.1, 1.0256382521611695),
    (0.5, 2.0, 1.0, 1.3281918274866849),
    (0.5, 2.0, 5.0, 9.418565045042618),
    (0.5, 2.0, 14.0, 13768.027129146754),
    (0.5, 2.0, 29.0, 1.4596446644396172e+10),
    (0.5, 2.0, 31.0, 9.7404883304471567e+10),
    (0.5, 2.0, 55.0, 1.0793697373628982e+21),
    (0.5, 2.0, 80.0, 4.410616885989568e+31),
    (0.5, 2.0, 200.0, 1.4468298033709826e+83),
    (1.5, 1.0, 0.1, 1.1597500669617811),
    (1.5, 1.0, 1.0, 3.9319711356445863),
    (1.5, 1.0, 5.0, 393.7700753196285),
    (1.5, 1.0, 14.0, 5.1689320612536352e+6),
    (1.5, 1.0, 29.0, 2.4095633205139697e+13),
    (1.5, 1.0, 31.0, 1.8397869749853998e+14),
    (1.5, 1.0, 55.0, 6.4685513560233717e+24),
    (1.5, 1.0, 80.0, 5.6093920330666879e+35),
    (1.5, 1.0, 200.0, 1.1545408587606027e+88),
    (1.5, 2.0, 0.1, 1.0782182348019939),
    (1.5, 2.0, 1.0, 2.1785834812674959),
    (1.5, 2.0, 5.0, 70.738325963110399),
    (1.5, 2.0, 14.0, 356003.3136337284),
    (1.5, 2.0, 29.0, 8.1655372819720334e+11),
    (1.5, 2.0, 31.0, 5.8390474621234203e+12),
    (1.5, 2.0, 55.0, 1.1654075083161604e+23),
    (1.5, 2.0, 80.0, 6.9679149095930291e+33),
    (1.5, 2.0, 200.0, 5.7582724419530468e+85),
    (2.5, 1.0, 0.1, 1.2730073459192997),
    (2.5, 1.0, 1.0, 7.2794797198301424),
    (2.5, 1.0, 5.0, 1824.2342029902408),
    (2.5, 1.0, 14.0, 5.5073646763244963e+7),
    (2.5, 1.0, 29.0, 4.978378945437468e+14),
    (2.5, 1.0, 31.0, 4.0465419362436415e+15),
    (2.5, 1.0, 55.0, 2.4578534817545996e+26),
    (2.5, 1.0, 80.0, 3.0663507777251485e+37),
    (2.5, 1.0, 200.0, 1.554772068563045e+90),
    (2.5, 2.0, 0.1, 1.1325727895751854),
    (2.5, 2.0, 1.0, 3.3475085841855561),
    (2.5, 2.0, 5.0, 286.09282553412247),
    (2.5, 2.0, 14.0, 3.5646224787136663e+6),
    (2.5, 2.0, 29.0, 1.6335940046158866e+13),
    (2.5, 2.0, 31.0, 1.2459881415306779e+14),
    (2.5, 2.0, 55.0, 4.3512144876261198e+24),
    (2.5, 2.0, 80.0, 3.762821071743102e+35),
    (2.5, 2.0, 200.0, 7.7161332998771951e+87),
    (-0.5, 1.0, 0.1, 0.94936441826546477),
    (-0.5, 1.0, 1.0, 0.42519582689040548),
    (-0.5, 1.0, 5.0, -7.0143797211365818),
    (-0.5, 1.0, 14.0, -7866.7094266169841),
    (-0.5, 1.0, 29.0, -7.7218652666892363e+9),
    (-0.5, 1.0, 31.0, -5.1325209724672643e+10),
    (-0.5, 1.0, 55.0, -5.5527527046992951e+20),
    (-0.5, 1.0, 80.0, -2.2482969565192044e+31),
    (-0.5, 1.0, 200.0, -7.2892367485869094e+82),
    (-0.5, 2.0, 0.1, 0.97478902956403302),
    (-0.5, 2.0, 1.0, 0.72619449375583196),
    (-0.5, 2.0, 5.0, -1.5367314657435152),
    (-0.5, 2.0, 14.0, -655.13057469573794),
    (-0.5, 2.0, 29.0, -2.8242796299410018e+8),
    (-0.5, 2.0, 31.0, -1.7485120482912393e+9),
    (-0.5, 2.0, 55.0, -1.0393601192320285e+19),
    (-0.5, 2.0, 80.0, -2.8659009016280288e+29),
    (-0.5, 2.0, 200.0, -3.6725154487997582e+80),
    (-1.5, 1.0, 0.1, 0.85188551530906146),
    (-1.5, 1.0, 1.0, -0.30099866686542648),
    (-1.5, 1.0, 5.0, 0.66927760758099426),
    (-1.5, 1.0, 14.0, 1305.1186191233471),
    (-1.5, 1.0, 29.0, 4.6854566013966875e+8),
    (-1.5, 1.0, 31.0, 2.878663772355775e+9),
    (-1.5, 1.0, 55.0, 1.6372795107686152e+19),
    (-1.5, 1.0, 80.0, 4.4423764783218622e+29),
    (-1.5, 1.0, 200.0, 5.5794149012607031e+80),
    (-1.5, 2.0, 0.1, 0.9256276238620444),
    (-1.5, 2.0, 1.0, 0.31531722950732859),
    (-1.5, 2.0, 5.0, -0.65432783641371143),
    (-1.5, 2.0, 14.0, 128.96910283189607),
    (-1.5, 2.0, 29.0, 1.7961486259407394e+7),
    (-1.5, 2.0, 31.0, 1.0235827996756645e+8),
    (-1.5, 2.0, 55.0, 3.1295732768229002e+17),
    (-1.5, 2.0, 80.0, 5.7410050351927586e+27),
    (-1.5, 2.0, 200.0, 2.8256691224426294e+78),
    (3.0, 1.0, 0.1, 1.3317309562811554),
    (3.0, 1.0, 1.0, 9.5139863996066583),
    (3.0, 1.0, 5.0, 3487.7092389105502),
    (3.0, 1.0, 14.0, 1.5273074408892665e+8),
    (3.0, 1.0, 29.0, 1.8850747954805682e+15),
    (3.0, 1.0, 31.0, 1.5788049793061976e+16),
    (3.0, 1.0, 55.0, 1.2492483877958065e+27),
    (3.0, 1.0, 80.0, 1.8622031833946587e+38),
    (3.0, 1.0, 200.0, 1.4741709084353341e+91),
    (3.0, 2.0, 0.1, 1.16042946397943),
    (3.0, 2.0, 1.0, 4.0774227426885679),
    (3.0, 2.0, 5.0, 519.44605685901811),
    (3.0, 2.0, 14.0, 9.6208342733182142e+6),
    (3.0, 2.0, 29.0, 6.0935681605732652e+13),
    (3.0, 2.0, 31.0, 4.7930601947658252e+14),
    (3.0, 2.0, 55.0, 2.1930138005654749e+25),
    (3.0, 2.0, 80.0, 2.2716551776013391e+36),
    (3.0, 2.0, 200.0, 7.2982335058070068e+88),
];
// U(alpha, beta, x) from mpmath hyperu at 40 digits
pub const U_TABLE: &[(f64, f64, f64, f64)] = &[
    (0.25, 1.0, 0.1, 1.5067442025692661),
    (0.25, 1.0, 0.5, 1.1119049033802103),
    (0.25, 1.0, 1.0, 0.95931644976058041),
    (0.25, 1.0, 3.0, 0.74680569742278632),
    (0.25, 1.0, 8.0, 0.5903384565512882),
    (0.25, 1.0, 16.0, 0.49813355003702625),
    (0.25, 1.0, 25.0, 0.44612836026400476),
    (0.25, 1.0, 40.0, 0.3970257131074392),
    (0.25, 1.0, 80.0, 0.33411142473764143),
    (0.25, 1.0, 500.0, 0.21144785957142319),
    (0.25, 2.0, 0.1, 4.087262062813067),
    (0.25, 2.0, 0.5, 1.5703017545169336),
    (0.25, 2.0, 1.0, 1.1698229955608357),
    (0.25, 2.0, 3.0, 0.80536212288590516),
    (0.25, 2.0, 8.0, 0.60829375817893456),
    (0.25, 2.0, 16.0, 0.50580517835505502),
    (0.25, 2.0, 25.0, 0.45054746851417409),
    (0.25, 2.0, 40.0, 0.39949216257430008),
    (0.25, 2.0, 80.0, 0.33515231944867361),
    (0.25, 2.0, 500.0, 0.21155353079702943),
    (0.5, 1.0, 0.1, 1.847102659887004),
    (0.5, 1.0, 0.5, 1.1167195397428042),
    (0.5, 1.0, 1.0, 0.85988663964100865),
    (0.5, 1.0, 3.0, 0.54061213091972101),
    (0.5, 1.0, 8.0, 0.34375939827455345),
    (0.5, 1.0, 16.0, 0.24633815903219312),
    (0.5, 1.0, 25.0, 0.19808329423507841),
    (0.5, 1.0, 40.0, 0.15715211796057678),
    (0.5, 1.0, 80.0, 0.11145880320459144),
    (0.5, 1.0, 500.0, 0.044699048973392612),
    (0.5, 2.0, 0.1, 6.8279265401547767),
    (0.5, 2.0, 0.5, 1.9155958371780423),
    (0.5, 2.0, 1.0, 1.2003469347909477),
    (0.5, 2.0, 3.0, 0.62099668370005927),
    (0.5, 2.0, 8.0, 0.36414872347251277),
    (0.5, 2.0, 16.0, 0.25382102642965971),
    (0.5, 2.0, 25.0, 0.20197138300967462),
    (0.5, 2.0, 40.0, 0.15909310510673831),
    (0.5, 2.0, 80.0, 0.11215117166763532),
    (0.5, 2.0, 500.0, 0.044743703501004954),
    (1.5, 1.0, 0.1, 1.7018757676668989),
    (1.5, 1.0, 0.5, 0.63568648461513196),
    (1.5, 1.0, 1.0, 0.35793209868226101),
    (1.5, 1.0, 3.0, 0.11660962847538294),
    (1.5, 1.0, 8.0, 0.035060390214408893),
    (1.5, 1.0, 16.0, 0.013772804626524378),
    (1.5, 1.0, 25.0, 0.007357711010536407),
    (1.5, 1.0, 40.0, 0.0037462925353088436),
    (1.5, 1.0, 80.0, 0.0013596982351414508),
    (1.5, 1.0, 500.0, 8.9042722102166505e-5),
    (1.5, 2.0, 0.1, 9.9616477605355452),
    (1.5, 2.0, 0.5, 1.5977525948704764),
    (1.5, 2.0, 1.0, 0.68092059029987814),
    (1.5, 2.0, 3.0, 0.16076910556067651),
    (1.5, 2.0, 8.0, 0.040778650395918626),
    (1.5, 2.0, 16.0, 0.014965734794933183),
    (1.5, 2.0, 25.0, 0.0077761775491924084),
    (1.5, 2.0, 40.0, 0.003881974292323059),
    (1.5, 2.0, 80.0, 0.0013847369260877589),
    (1.5, 2.0, 500.0, 8.9309055224683058e-5),
    (2.5, 1.0, 0.1, 0.7674828676504372),
    (2.5, 1.0, 0.5, 0.20999852079778922),
    (2.5, 1.0, 1.0, 0.095070958402566395),
    (2.5, 1.0, 3.0, 0.018860449536530519),
    (2.5, 1.0, 8.0, 0.0030420017197935457),
    (2.5, 1.0, 16.0, 6.9881077566475353e-4),
    (2.5, 1.0, 25.0, 2.5551246640203366e-4),
    (2.5, 1.0, 40.0, 8.5408232175399633e-5),
    (2.5, 1.0, 80.0, 1.6200923114454849e-5),
    (2.5, 1.0, 500.0, 1.7667639776574947e-7),
    (2.5, 2.0, 0.1, 5.5065146619124309),
    (2.5, 2.0, 0.5, 0.64137740683689626),
    (2.5, 2.0, 1.0, 0.21532566107841142),
    (2.5, 2.0, 3.0, 0.029439651390195719),
    (2.5, 2.0, 8.0, 0.0038121734543398218),
    (2.5, 2.0, 16.0, 7.9528677893920301e-4),
    (2.5, 2.0, 25.0, 2.7897769243733426e-4),
    (2.5, 2.0, 40.0, 9.0454504676143603e-5),
    (2.5, 2.0, 80.0, 1.6692460630872106e-5),
    (2.5, 2.0, 500.0, 1.7755541501103576e-7),
    (3.0, 1.0, 0.1, 0.43882213318684212),
    (3.0, 1.0, 0.5, 0.10559254701396362),
    (3.0, 1.0, 1.0, 0.04360788406558963),
    (3.0, 1.0, 3.0, 0.0069815064680813531),
    (3.0, 1.0, 8.0, 8.5116171073313973e-4),
    (3.0, 1.0, 16.0, 1.5234048879311301e-4),
    (3.0, 1.0, 25.0, 4.6515061306013485e-5),
    (3.0, 1.0, 40.0, 1.2692576387847023e-5),
    (3.0, 1.0, 80.0, 1.7533119035496898e-6),
    (3.0, 1.0, 500.0, 7.858266277934968e-9),
    (3.0, 2.0, 0.1, 3.3846253280561255),
    (3.0, 2.0, 0.5, 0.34636170939533691),
    (3.0, 2.0, 1.0, 0.10547895651520889),
    (3.0, 2.0, 3.0, 0.011457316028370426),
    (3.0, 2.0, 8.0, 0.0011018037325034409),
    (3.0, 2.0, 16.0, 1.7706752299207432e-4),
    (3.0, 2.0, 25.0, 5.1565593795701887e-5),
    (3.0, 2.0, 40.0, 1.3583327799898326e-5),
    (3.0, 2.0, 80.0, 1.8167891770035482e-6),
    (3.0, 2.0, 500.0, 7.9051368666000797e-9),
    (-0.5, 1.0, 0.1, -0.24075867592802431),
    (-0.5, 1.0, 0.5, 0.39943814871761909),
    (-0.5, 1.0, 1.0, 0.7704036149704434),
    (-0.5, 1.0, 3.0, 1.5926839856403173),
    (-0.5, 1.0, 8.0, 2.7413100886428254),
    (-0.5, 1.0, 16.0, 3.9379673433584588),
    (-0.5, 1.0, 25.0, 4.9502429281243262),
    (-0.5, 1.0, 40.0, 6.285148145289244),
    (-0.5, 1.0, 80.0, 8.9163643318085299),
    (-0.5, 1.0, 500.0, 22.349502226015781),
    (-0.5, 2.0, 0.1, -3.6547219460054126),
    (-0.5, 2.0, 0.5, -0.55835976987140208),
    (-0.5, 2.0, 1.0, 0.17023014757496954),
    (-0.5, 2.0, 3.0, 1.2821856437902877),
    (-0.5, 2.0, 8.0, 2.559235726906569),
    (-0.5, 2.0, 16.0, 3.8110568301436289),
    (-0.5, 2.0, 25.0, 4.8492572366194889),
    (-0.5, 2.0, 40.0, 6.2056015927358748),
    (-0.5, 2.0, 80.0, 8.8602887459747122),
    (-0.5, 2.0, 500.0, 22.327130374265278),
    (-1.5, 1.0, 0.1, -0.0043341807085048129),
    (-1.5, 1.0, 0.5, -0.87833710801212967),
    (-1.5, 1.0, 1.0, -0.98537527488069556),
    (-1.5, 1.0, 3.0, 1.457530952910387),
    (-1.5, 1.0, 8.0, 16.361920682288314),
    (-1.5, 1.0, 16.0, 55.069958267260374),
    (-1.5, 1.0, 25.0, 113.80606652330073),
    (-1.5, 1.0, 40.0, 238.79634149150113),
    (-1.5, 1.0, 80.0, 695.44855318026418),
    (-1.5, 1.0, 500.0, 11130.040933793615),
    (-1.5, 2.0, 0.1, 5.4777487382996141),
    (-1.5, 2.0, 0.5, -0.040797453205026553),
    (-1.5, 2.0, 1.0, -1.2407204962431499),
    (-1.5, 2.0, 3.0, -0.46574751277504445),
    (-1.5, 2.0, 8.0, 12.523067091928461),
    (-1.5, 2.0, 16.0, 49.353373022044931),
    (-1.5, 2.0, 25.0, 106.5321806683715),
    (-1.5, 2.0, 40.0, 229.48793910239732),
    (-1.5, 2.0, 80.0, 682.15812006130211),
    (-1.5, 2.0, 500.0, 11096.550238232217),
    (-2.75, 1.0, 0.1, -1.6789943611192736),
    (-2.75, 1.0, 0.5, 2.2609456437393117),
    (-2.75, 1.0, 1.0, 2.8737635128670185),
    (-2.75, 1.0, 3.0, -6.4458144322387847),
    (-2.75, 1.0, 8.0, 70.444735023768694),
    (-2.75, 1.0, 16.0, 1171.556033158062),
    (-2.75, 1.0, 25.0, 5002.4282095403114),
    (-2.75, 1.0, 40.0, 20820.598317961598),
    (-2.75, 1.0, 80.0, 155323.03942777147),
    (-2.75, 1.0, 500.0, 2.6035687062057188e+7),
    (-2.75, 2.0, 0.1, -22.332911760416753),
    (-2.75, 2.0, 0.5, -2.1899054194073581),
    (-2.75, 2.0, 1.0, 4.1602512170116033),
    (-2.75, 2.0, 3.0, -1.8175148277364501),
    (-2.75, 2.0, 8.0, 23.544018490446144),
    (-2.75, 2.0, 16.0, 921.07162096976537),
    (-2.75, 2.0, 25.0, 4377.8508961943486),
    (-2.75, 2.0, 40.0, 19278.042063578741),
    (-2.75, 2.0, 80.0, 149789.2328519907),
    (-2.75, 2.0, 500.0, 2.5891696041219747e+7),
];
// (x, J0, J1, Y0, Y1, I0, I1, K0, K1) from mpmath at 40 digits
pub const BESSEL_TABLE: &[(f64, [f64; 8])] = &[
    (
        0.1,
        [
            0.99750156206604003,
            0.049937526036242,
            -1.5342386513503668,
            -6.4589510947020266,
            1.0025015629340956,
            0.050062526047092695,
            2.4270690247020166,
            9.8538447808706056,
        ],
    ),
    (
        0.7,
        [
            0.8812008886074053,
            0.32899574154005893,
            -0.19066492933739512,
            -1.1032498719076334,
            1.1263030183068092,
            0.37187967777700863,
            0.6605198599151016,
            1.050283535312918,
        ],
    ),
    (
        1.0,
        [
            0.76519768655796655,
            0.44005058574493352,
            0.088256964215676958,
            -0.78121282130028872,
            1.2660658777520083,
            0.56515910399248503,
            0.42102443824070833,
            0.60190723019723457,
        ],
    ),
    (
        2.0,
        [
            0.22389077914123567,
            0.57672480775687339,
            0.51037567264974512,
            -0.10703243154093755,
            2.2795853023360673,
            1.5906368546373291,
            0.11389387274953344,
            0.13986588181652243,
        ],
    ),
    (
        2.5,
        [
            -0.048383776468197996,
            0.49709410246427404,
            0.49807035961523189,
            0.1459181379667858,
            3.289839144050123,
            2.5167162452886984,
            0.062347553200366186,
            0.073890816347747064,
        ],
    ),
    (
        5.0,
        [
            -0.1775967713143383,
            -0.32757913759146522,
            -0.30851762524903378,
            0.14786314339122684,
            27.239871823604447,
            24.335642142450527,
            0.0036910983340425943,
            0.0040446134454521642,
        ],
    ),
    (
        9.0,
        [
            -0.090333611182876134,
            0.24531178657332527,
            0.24993669828502468,
            0.10431457519671589,
            1093.5883545113747,
            1030.9147225169564,
            5.0881312956459248e-5,
            5.3637016379451945e-5,
        ],
    ),
    (
        12.0,
        [
            0.047689310796833537,
            -0.22344710449062761,
            -0.22523731263436143,
            -0.057099218260896521,
            18948.925349296309,
            18141.348781638832,
            2.2008253973114914e-6,
            2.2907574647671878e-6,
        ],
    ),
    (
        12.4,
        [
            0.1295610265175023,
            -0.18071024688267324,
            -0.18577661526724332,
            -0.13714437659862749,
            27798.565849335445,
            26652.95539739406,
            1.4517200003131219e-6,
            1.5091617711449302e-6,
        ],
    ),
    (
        12.6,
        [
            0.16260727174551062,
            -0.14874234342196019,
            -0.15506412381725603,
            -0.16887791860291364,
            33676.811269167568,
            32311.49402070548,
            1.1792722098517721e-6,
            1.2252060350335418e-6,
        ],
    ),
    (
        13.0,
        [
            0.20692610237706781,
            -0.070318052121778371,
            -0.078207864527875911,
            -0.21008140842069351,
            49444.489582217573,
            47502.987358995861,
            7.7845438614204963e-7,
            8.0785884122023473e-7,
        ],
    ),
    (
        17.0,
        [
            -0.16985425215118355,
            -0.09766849275778065,
            -0.092637198442323693,
            0.16720503607723369,
            2.3549702231682934e+6,
            2.2846215838080798e+6,
            1.2494664026317732e-8,
            1.2857041671666646e-8,
        ],
    ),
    (
        19.9,
        [
            0.17287775639261846,
            0.050117424807379741,
            0.045762094159385479,
            -0.17178303121049256,
            3.9513376520066824e+7,
            3.8507423874862283e+7,
            6.3607809496423133e-10,
            6.5186855008514769e-10,
        ],
    ),
    (
        20.1,
        [
            0.15953606793729709,
            0.082801005760209763,
            0.078810592428750293,
            -0.15762598074781154,
            4.8017874107136503e+7,
            4.6807739533029883e+7,
            5.1821017487977158e-10,
            5.3094805561513182e-10,
        ],
    ),
    (
        30.0,
        [
            -0.086367983581040211,
            -0.11875106261662294,
            -0.11729573168666403,
            0.084425570661747235,
            7.8167229782397749e+11,
            7.68532038938957e+11,
            2.1324774964630564e-14,
            2.1677320018915494e-14,
        ],
    ),
    (
        50.0,
        [
            0.055812327669251815,
            -0.097511828125175138,
            -0.098064995470077079,
            -0.056795668562014768,
            2.9325537838493363e+20,
            2.9030785901035568e+20,
            3.4101677497894955e-23,
            3.4441022267175556e-23,
        ],
    ),
    (
        200.0,
        [
            -0.015437439930565092,
            -0.054304538182378223,
            -0.054265775249817911,
            0.015301824580389989,
            2.0396871734097246e+85,
            2.0345815493320627e+85,
            1.2256819797765335e-88,
            1.2287423734729858e-88,
        ],
    ),
];
