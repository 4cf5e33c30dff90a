//! Frozen reference rows for the end-to-end checks: low-order exact
//! coefficients, the summation table at coupling 1/7 (and its image
//! 40/49), the two prediction tables, and the sweep of relative
//! prediction errors.  All values are stored as printed — scientific
//! entries as `0.ddd...e±EEE`, approximant values in fixed point —
//! and the checks compare numerically with a half-ulp tolerance on the
//! last printed digit.

/// First ten exact series coefficients of the cubic-term oscillator.
pub const LOW_ORDER_COEFFICIENTS: &[(usize, &str)] = &[
    (1, "11"),
    (2, "-930"),
    (3, "158836"),
    (4, "-38501610"),
    (5, "11777967516"),
    (6, "-4300048271460"),
    (7, "1815215203378344"),
    (8, "-868277986898581530"),
    (9, "464025598165231889260"),
    (10, "-274145574452876905074540"),
];

/// Summation rows at coupling 1/7 (squared: z = 1/49) and its quartic
/// image z = 40/49: (n, partial sum, quartic partial sum, staircase
/// value, quartic staircase value).
pub const SUMMATION_ROWS: &[(usize, &str, &str, &str, &str)] = &[
    (0, "0.110e+002", "0.750e+000", "11.00000000000000", "0.750000000000000"),
    (1, "-0.798e+001", "-0.321e+000", "-7.97959183673469", "-0.321428571428571"),
    (2, "0.582e+002", "0.315e+001", "6.76871520405468", "0.497075017205781"),
    (3, "-0.269e+003", "-0.133e+002", "3.14452476154168", "0.283471705042096"),
    (4, "0.177e+004", "0.861e+002", "5.92770890838469", "0.444962648249413"),
    (5, "-0.134e+005", "-0.639e+003", "4.84920642167536", "0.379736282027717"),
    (50, "0.153e+072", "0.684e+070", "5.52416958165793", "0.419249574461710"),
    (51, "-0.964e+073", "-0.432e+072", "5.52416451428038", "0.419249241261250"),
    (52, "0.620e+075", "0.278e+074", "5.52416888260688", "0.419249527748761"),
    (53, "-0.407e+077", "-0.182e+076", "5.52416531636255", "0.419249293076390"),
    (54, "0.272e+079", "0.122e+078", "5.52416839738891", "0.419249495310895"),
    (101, "-0.210e+172", "-0.939e+170", "5.52416721141847", "0.419249415925473"),
    (102, "0.263e+174", "0.118e+173", "5.52416721422990", "0.419249416112202"),
    (103, "-0.334e+176", "-0.149e+175", "5.52416721178460", "0.419249415949529"),
    (104, "0.427e+178", "0.191e+177", "5.52416721397212", "0.419249416094862"),
    (105, "-0.552e+180", "-0.247e+179", "5.52416721206667", "0.419249415968069"),
    (150, "0.318e+279", "0.142e+278", "5.52416721306531", "0.419249416033824"),
    (151, "-0.590e+281", "-0.264e+280", "5.52416721305477", "0.419249416033119"),
    (152, "0.110e+284", "0.493e+282", "5.52416721306436", "0.419249416033760"),
    (153, "-0.207e+286", "-0.928e+284", "5.52416721305579", "0.419249416033187"),
    (154, "0.392e+288", "0.175e+287", "5.52416721306359", "0.419249416033708"),
    (188, "0.371e+367", "0.166e+366", "5.52416721306035", "0.419249416033489"),
    (189, "-0.860e+369", "-0.385e+368", "5.52416721306009", "0.419249416033472"),
    (190, "0.201e+372", "0.898e+370", "5.52416721306033", "0.419249416033488"),
    (191, "-0.471e+374", "-0.211e+373", "5.52416721306011", "0.419249416033474"),
    (192, "0.111e+377", "0.496e+375", "5.52416721306031", "0.419249416033487"),
];

/// Cubic-term predictions from the 33-column remainder expansion at
/// offset 0: (nu, predicted gamma_{nu+67}, true gamma_{nu+67}).
pub const CUBIC_PREDICTION_ROWS: &[(usize, &str, &str)] = &[
    (0, "-0.118625502281564111353e+217", "-0.118625502281564111358e+217"),
    (1, "0.487707952691623584397e+220", "0.487707952691623585158e+220"),
    (2, "-0.203437822070101216978e+224", "-0.203437822070101222504e+224"),
    (3, "0.860803267021875481138e+227", "0.860803267021875756369e+227"),
    (4, "-0.369393498548727222559e+231", "-0.369393498548728279960e+231"),
    (5, "0.160732212082002560522e+235", "0.160732212082005901209e+235"),
    (6, "-0.709026471212486114145e+238", "-0.709026471212576489701e+238"),
    (7, "0.317020667799578470271e+242", "0.317020667799793728631e+242"),
    (8, "-0.143648198373426854924e+246", "-0.143648198373887496043e+246"),
    (9, "0.659514281085804565498e+249", "0.659514281094798452336e+249"),
    (10, "-0.306750687264795900309e+253", "-0.306750687281012588650e+253"),
    (11, "0.144514693689642646364e+257", "0.144514693716909093737e+257"),
    (12, "-0.689498329409437387151e+260", "-0.689498329840371816155e+260"),
    (13, "0.333104548293054144923e+264", "0.333104548937521023558e+264"),
    (14, "-0.162924769352053020131e+268", "-0.162924770269205895837e+268"),
    (15, "0.806654532549091198441e+271", "0.806654545029445531410e+271"),
];

/// Quartic predictions from the same scheme: (nu, predicted, truth).
pub const QUARTIC_PREDICTION_ROWS: &[(usize, &str, &str)] = &[
    (0, "-0.243941384991118295771e+108", "-0.243941384991118295782e+108"),
    (1, "0.250725042695070353544e+110", "0.250725042695070353955e+110"),
    (2, "-0.261457030278874510535e+112", "-0.261457030278874517978e+112"),
    (3, "0.276569040522183341803e+114", "0.276569040522183434367e+114"),
    (4, "-0.296701814375736021569e+116", "-0.296701814375736909442e+116"),
    (5, "0.322749390515363534568e+118", "0.322749390515370538244e+118"),
    (6, "-0.355923577678312610650e+120", "-0.355923577678359918630e+120"),
    (7, "0.397845013388761856087e+122", "0.397845013389043208304e+122"),
    (8, "-0.450670140529734425361e+124", "-0.450670140531237820183e+124"),
    (9, "0.517267603130982724472e+126", "0.517267603138312496560e+126"),
    (10, "-0.601463530952366420452e+128", "-0.601463530985369171801e+128"),
    (11, "0.708383831448709420419e+130", "0.708383831587280706922e+130"),
    (12, "-0.844934259800460726512e+132", "-0.844934260347380950714e+132"),
    (13, "0.102047769191033928036e+135", "0.102047769395298233145e+135"),
    (14, "-0.124779572617585209351e+137", "-0.124779573343562971244e+137"),
    (15, "0.154446315576951606777e+139", "0.154446318044174985350e+139"),
];

/// Relative errors of the first staircase prediction beyond each order:
/// (n, cubic-series error, quartic-series error).
pub const SWEEP_ERROR_ROWS: &[(usize, &str, &str)] = &[
    (2, "-0.295410699e+000", "-0.316117394e+000"),
    (3, "-0.207610910e+000", "-0.218823682e+000"),
    (4, "-0.759683860e-001", "-0.833341229e-001"),
    (5, "-0.483909816e-001", "-0.522231970e-001"),
    (6, "-0.197254000e-001", "-0.218362310e-001"),
    (7, "-0.120176754e-001", "-0.130908858e-001"),
    (50, "-0.258379657e-014", "-0.273374025e-014"),
    (51, "-0.134007443e-014", "-0.141313446e-014"),
    (52, "-0.658949507e-015", "-0.696514376e-015"),
    (53, "-0.341294856e-015", "-0.359600798e-015"),
    (54, "-0.167932626e-015", "-0.177342673e-015"),
    (100, "-0.327674717e-029", "-0.341449758e-029"),
    (101, "-0.166900610e-029", "-0.173636626e-029"),
    (102, "-0.827630688e-030", "-0.862097827e-030"),
    (103, "-0.421400183e-030", "-0.438256801e-030"),
    (104, "-0.208999229e-030", "-0.217623211e-030"),
    (140, "-0.354821178e-041", "-0.367523224e-041"),
    (141, "-0.179775658e-041", "-0.186000741e-041"),
    (142, "-0.893606384e-042", "-0.925378776e-042"),
    (143, "-0.452675070e-042", "-0.468247723e-042"),
    (144, "-0.225028932e-042", "-0.232976269e-042"),
    (187, "-0.295089701e-055", "-0.304045084e-055"),
    (188, "-0.146895157e-055", "-0.151456461e-055"),
    (189, "-0.741750230e-056", "-0.764148505e-056"),
    (190, "-0.369259543e-056", "-0.380666936e-056"),
    (191, "-0.186438979e-056", "-0.192040968e-056"),
];
