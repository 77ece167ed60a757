//! Frozen reference rows from the published variance tables.
//!
//! Each entry is (log(X/h), Var^fix(X, h; F)/h). The zeta table was produced
//! on the explicit h grid below; the degree-2 tables use the geometric grid
//! h = 100 * 1.1^k, k = 0..48.

/// The 36 h values behind the zeta table at X = 15e6.
pub const ZETA_H_GRID: [u64; 36] = [
    1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 20, 30, 40, 50, 60, 70, 80, 90, 100, 200, 300, 400, 500, 600, 700, 800, 900, 1000, 2000, 3000, 4000, 5000, 6000, 7000, 8000, 9000,
];

/// Riemann zeta, X = 15e6.
pub const ZETA_VARIANCE_TABLE: [(f64, f64); 36] = [
    (16.523560759066484, 14.520951259388584),
    (15.830413578506539, 13.521030326116232),
    (15.424948470398375, 13.403677020009642),
    (15.137266397946593, 12.845041532187183),
    (14.914122846632385, 12.6383584434893),
    (14.73180128983843, 12.167262959003123),
    (14.57765061001117, 12.29675543048168),
    (14.444119217386648, 12.143894781372447),
    (14.326336181730264, 12.096567426173788),
    (14.22097566607244, 11.858721924525783),
    (13.527828485512494, 11.170738706704546),
    (13.122363377404328, 10.592076902033908),
    (12.834681304952548, 10.421986805840097),
    (12.611537753638338, 10.237567907703243),
    (12.429216196844383, 9.969909185902116),
    (12.275065517017126, 9.848096278758504),
    (12.141534124392603, 9.721962958385818),
    (12.02375108873622, 9.578118995789781),
    (11.918390573078392, 9.531382786577403),
    (11.225243392518447, 8.792654834154554),
    (10.819778284410283, 8.382459283873876),
    (10.532096211958502, 8.091839805669087),
    (10.308952660644293, 7.875314741751184),
    (10.126631103850338, 7.692603652059396),
    (9.972480424023079, 7.552222846376847),
    (9.838949031398556, 7.427696970639272),
    (9.721165995742174, 7.312241880462279),
    (9.615805480084347, 7.211462585733127),
    (8.922658299524402, 6.461382646993843),
    (8.517193191416238, 6.016651372253434),
    (8.229511118964457, 5.691277480520871),
    (8.006367567650246, 5.42447154063884),
    (7.824046010856292, 5.190747452086452),
    (7.669895331029034, 5.005145706015339),
    (7.536363938404511, 4.8543217618304055),
    (7.418580902748128, 4.734743947320245),
];

/// Ramanujan tau, X = 1e6.
pub const TAU_VARIANCE_TABLE: [(f64, f64); 49] = [
    (9.210340371976184, 12.450145500729484),
    (9.115030192171858, 12.400661530125248),
    (9.019720012367532, 12.34708451164469),
    (8.924409832563208, 12.284762216995691),
    (8.829099652758883, 12.197874687361988),
    (8.733789472954557, 12.164159618941683),
    (8.638479293150233, 12.082616628550099),
    (8.543169113345908, 11.958999153859036),
    (8.447858933541584, 11.885484133822498),
    (8.352548753737258, 11.751711045091765),
    (8.257238573932932, 11.628142799666147),
    (8.161928394128608, 11.476177630280777),
    (8.066618214324283, 11.292865565851903),
    (7.971308034519958, 11.13438685471049),
    (7.875997854715633, 10.919082193463444),
    (7.7806876749113085, 10.710582242779699),
    (7.685377495106984, 10.485899640658461),
    (7.590067315302659, 10.252602524429552),
    (7.494757135498334, 10.004228907396628),
    (7.399446955694009, 9.768845004850796),
    (7.304136775889684, 9.51720291528726),
    (7.208826596085359, 9.26350592739765),
    (7.113516416281034, 9.040880153862338),
    (7.0182062364767095, 8.812677793267488),
    (6.922896056672384, 8.609000170727947),
    (6.827585876868059, 8.451093480225197),
    (6.732275697063734, 8.288420442037078),
    (6.6369655172594095, 8.11362657142882),
    (6.541655337455085, 7.906395737347605),
    (6.446345157650759, 7.6999278055609786),
    (6.351034977846434, 7.532567145504188),
    (6.25572479804211, 7.397706971472282),
    (6.160414618237785, 7.27547302341981),
    (6.06510443843346, 7.132153930099307),
    (5.969794258629135, 6.941217742936219),
    (5.87448407882481, 6.709297941076495),
    (5.779173899020485, 6.496911012764781),
    (5.68386371921616, 6.303311826157115),
    (5.588553539411835, 6.174019590689406),
    (5.4932433596075105, 6.072318960136859),
    (5.397933179803185, 5.901837491254716),
    (5.30262299999886, 5.73333600100444),
    (5.207312820194535, 5.62867540353775),
    (5.112002640390211, 5.549964378657342),
    (5.016692460585886, 5.441854148589055),
    (4.92138228078156, 5.3061800338739395),
    (4.826072100977235, 5.127159813303661),
    (4.730761921172911, 4.95365755484686),
    (4.635451741368586, 4.740360864001797),
];

/// Conductor-27 curve (0,0,1,0,-7), X = 1e6.
pub const E27_VARIANCE_TABLE: [(f64, f64); 49] = [
    (9.210340371976184, 12.988785064767487),
    (9.115030192171858, 12.997764032878326),
    (9.019720012367532, 13.004586724380916),
    (8.924409832563208, 12.996769241593741),
    (8.829099652758883, 12.969625627496745),
    (8.733789472954557, 13.00376857091496),
    (8.638479293150233, 13.007987156980438),
    (8.543169113345908, 12.975635494444667),
    (8.447858933541584, 13.033284261301656),
    (8.352548753737258, 13.033043192354626),
    (8.257238573932932, 13.08258479534229),
    (8.161928394128608, 13.115676961833989),
    (8.066618214324283, 13.122741336640091),
    (7.971308034519958, 13.18214683047017),
    (7.875997854715633, 13.20063183388228),
    (7.7806876749113085, 13.228130275666208),
    (7.685377495106984, 13.229483400369974),
    (7.590067315302659, 13.205322374563357),
    (7.494757135498334, 13.157477154742308),
    (7.399446955694009, 13.136853514795833),
    (7.304136775889684, 13.083083808143206),
    (7.208826596085359, 13.051777633357279),
    (7.113516416281034, 12.995012253080189),
    (7.0182062364767095, 12.929632471752942),
    (6.922896056672384, 12.857957169486875),
    (6.827585876868059, 12.815959430094711),
    (6.732275697063734, 12.773318932555258),
    (6.6369655172594095, 12.702737753973945),
    (6.541655337455085, 12.642776486984614),
    (6.446345157650759, 12.531318431782148),
    (6.351034977846434, 12.321691986578813),
    (6.25572479804211, 12.057288145267053),
    (6.160414618237785, 11.767987859842052),
    (6.06510443843346, 11.47497952479035),
    (5.969794258629135, 11.18894511351632),
    (5.87448407882481, 10.878437827450739),
    (5.779173899020485, 10.519282456130739),
    (5.68386371921616, 10.165806048054563),
    (5.588553539411835, 9.834006161915957),
    (5.4932433596075105, 9.547996149220548),
    (5.397933179803185, 9.318551329935705),
    (5.30262299999886, 9.161481632716423),
    (5.207312820194535, 8.991573418986622),
    (5.112002640390211, 8.833917397378329),
    (5.016692460585886, 8.663093726005181),
    (4.92138228078156, 8.450088627208237),
    (4.826072100977235, 8.239267016764318),
    (4.730761921172911, 7.976739439896056),
    (4.635451741368586, 7.753322167924815),
];

/// Conductor-37 curve (0,0,1,-1,0), X = 1e6.
pub const E37_VARIANCE_TABLE: [(f64, f64); 49] = [
    (9.210340371976184, 12.82419062430585),
    (9.115030192171858, 12.824246155795045),
    (9.019720012367532, 12.81357460024457),
    (8.924409832563208, 12.797500787698318),
    (8.829099652758883, 12.76300497079633),
    (8.733789472954557, 12.776251574611361),
    (8.638479293150233, 12.749465174239809),
    (8.543169113345908, 12.688138502913288),
    (8.447858933541584, 12.708073672744717),
    (8.352548753737258, 12.668437222504767),
    (8.257238573932932, 12.659516631186529),
    (8.161928394128608, 12.62036080103507),
    (8.066618214324283, 12.55357581884703),
    (7.971308034519958, 12.508511156031718),
    (7.875997854715633, 12.413449182303953),
    (7.7806876749113085, 12.355566368813387),
    (7.685377495106984, 12.316274278741968),
    (7.590067315302659, 12.27403213804591),
    (7.494757135498334, 12.218381134327782),
    (7.399446955694009, 12.192096796383874),
    (7.304136775889684, 12.148118791048645),
    (7.208826596085359, 12.090486660647485),
    (7.113516416281034, 12.014232065244181),
    (7.0182062364767095, 11.943484322389757),
    (6.922896056672384, 11.868757249267126),
    (6.827585876868059, 11.8063365856975),
    (6.732275697063734, 11.703796111556624),
    (6.6369655172594095, 11.611703390592691),
    (6.541655337455085, 11.554883462186949),
    (6.446345157650759, 11.501008379721927),
    (6.351034977846434, 11.4462613335653),
    (6.25572479804211, 11.344293582088966),
    (6.160414618237785, 11.220498150395324),
    (6.06510443843346, 11.076834588986078),
    (5.969794258629135, 10.91191153989503),
    (5.87448407882481, 10.760513116812575),
    (5.779173899020485, 10.554304781334274),
    (5.68386371921616, 10.336733819880877),
    (5.588553539411835, 10.128055692162041),
    (5.4932433596075105, 9.902032018560478),
    (5.397933179803185, 9.687620146916695),
    (5.30262299999886, 9.469430820236642),
    (5.207312820194535, 9.27655248794704),
    (5.112002640390211, 9.096138728539657),
    (5.016692460585886, 8.884950651380095),
    (4.92138228078156, 8.719455650136204),
    (4.826072100977235, 8.56622087360894),
    (4.730761921172911, 8.39938554053581),
    (4.635451741368586, 8.25496743981971),
];
