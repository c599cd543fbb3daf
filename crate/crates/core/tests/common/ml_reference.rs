// Generated by python/gen_reference.py; regenerate instead of editing.
//
// Reference values computed with mpmath through routes independent of
// the Rust implementation (guard-digit series, closed forms, and a
// spectral integral representation, cross-checked against each other).

/// Rows of (alpha, beta, z, E_{alpha,beta}(z), rel_tol).
pub const ML_POINT_CHECKS: &[(f64, f64, f64, f64, f64)] = &[
    (0.25, 1.0, -5.0, 1.42798946425873707e-01, 1e-09),
    (0.25, 1.0, -2.5, 2.52564634888944206e-01, 1e-09),
    (0.25, 1.0, -1.0, 4.63852760801713282e-01, 1e-09),
    (0.25, 1.0, -0.25, 7.80903422825381721e-01, 1e-09),
    (0.25, 1.0, 0.25, 1.36833963722946028e+00, 1e-09),
    (0.25, 1.0, 1.0, 9.55410740072285414e+00, 1e-09),
    (0.25, 1.0, 2.5, 3.68712779720787072e+17, 1e-09),
    (0.25, 1.0, 5.0, 1.08670378786549469e+272, 1e-09),
    (0.3, 1.0, -5.0, 1.37080869020270640e-01, 1e-11),
    (0.3, 1.0, -2.5, 2.44983123794786956e-01, 1e-11),
    (0.3, 1.0, -1.0, 4.56594408329690671e-01, 1e-11),
    (0.3, 1.0, -0.25, 7.78074546401518075e-01, 1e-11),
    (0.3, 1.0, 0.25, 1.36921479230155252e+00, 1e-11),
    (0.3, 1.0, 1.0, 8.04067559696705914e+00, 1e-11),
    (0.3, 1.0, 2.5, 5.40375778117488194e+09, 1e-11),
    (0.3, 1.0, 5.0, 2.24915027755480762e+93, 1e-11),
    (0.5, 1.0, -5.0, 1.10704637733068628e-01, 1e-11),
    (0.5, 1.0, -2.5, 2.10806364061143586e-01, 1e-11),
    (0.5, 1.0, -1.0, 4.27583576155806999e-01, 1e-11),
    (0.5, 1.0, -0.25, 7.70346547730996756e-01, 1e-11),
    (0.5, 1.0, 0.25, 1.35864237010472211e+00, 1e-11),
    (0.5, 1.0, 1.0, 5.00898008076228329e+00, 1e-11),
    (0.5, 1.0, 2.5, 1.03581484297262296e+03, 1e-11),
    (0.5, 1.0, 5.0, 1.44009798674661041e+11, 1e-11),
    (0.7, 1.0, -5.0, 7.75693577647698085e-02, 1e-11),
    (0.7, 1.0, -2.5, 1.68631286676195757e-01, 1e-11),
    (0.7, 1.0, -1.0, 3.99611978115599398e-01, 1e-11),
    (0.7, 1.0, -0.25, 7.68823510378480846e-01, 1e-11),
    (0.7, 1.0, 0.25, 1.33348626515301016e+00, 1e-11),
    (0.7, 1.0, 1.0, 3.70414614543758614e+00, 1e-11),
    (0.7, 1.0, 2.5, 5.78223984406253351e+01, 1e-11),
    (0.7, 1.0, 5.0, 3.04198198020495111e+04, 1e-11),
    (0.75, 1.0, -5.0, 6.79239743326439382e-02, 1e-09),
    (0.75, 1.0, -2.5, 1.56426958611947442e-01, 1e-09),
    (0.75, 1.0, -1.0, 3.93108302815754040e-01, 1e-09),
    (0.75, 1.0, -0.25, 7.69466766429011240e-01, 1e-09),
    (0.75, 1.0, 0.25, 1.32587628521551504e+00, 1e-09),
    (0.75, 1.0, 1.0, 3.48586622005174407e+00, 1e-09),
    (0.75, 1.0, 2.5, 3.95959590785153566e+01, 1e-09),
    (0.75, 1.0, 5.0, 6.88813167974014777e+03, 1e-09),
    (0.9, 1.0, -5.0, 3.44313248040984191e-02, 1e-09),
    (0.9, 1.0, -2.5, 1.14699867545577844e-01, 1e-09),
    (0.9, 1.0, -1.0, 3.76066021424641905e-01, 1e-09),
    (0.9, 1.0, -0.25, 7.73869531649602260e-01, 1e-09),
    (0.9, 1.0, 0.25, 1.30127684275615318e+00, 1e-09),
    (0.9, 1.0, 1.0, 2.97493907497044718e+00, 1e-09),
    (0.9, 1.0, 2.5, 1.76685159496539050e+01, 1e-09),
    (0.9, 1.0, 5.0, 4.38951814664482640e+02, 1e-09),
    (1.0, 1.0, -5.0, 6.73794699908546700e-03, 1e-11),
    (1.0, 1.0, -2.5, 8.20849986238988000e-02, 1e-11),
    (1.0, 1.0, -1.0, 3.67879441171442334e-01, 1e-11),
    (1.0, 1.0, -0.25, 7.78800783071404878e-01, 1e-11),
    (1.0, 1.0, 0.25, 1.28402541668774139e+00, 1e-11),
    (1.0, 1.0, 1.0, 2.71828182845904509e+00, 1e-11),
    (1.0, 1.0, 2.5, 1.21824939607034732e+01, 1e-11),
    (1.0, 1.0, 5.0, 1.48413159102576600e+02, 1e-11),
    (0.5, 1.25, -5.0, 1.50930179713072654e-01, 1e-09),
    (0.5, 1.25, -2.5, 2.75439649094855410e-01, 1e-09),
    (0.5, 1.25, -1.0, 5.22178779134626736e-01, 1e-09),
    (0.5, 1.25, -0.25, 8.78032296524248301e-01, 1e-09),
    (0.5, 1.25, 0.25, 1.44194370180865761e+00, 1e-09),
    (0.5, 1.25, 1.0, 4.54512731996056996e+00, 1e-09),
    (0.5, 1.25, 2.5, 6.54884921976493160e+02, 1e-09),
    (0.5, 1.25, 5.0, 6.44031398523973770e+10, 1e-09),
    (0.6, 1.3, -5.0, 1.47606953183232831e-01, 1e-11),
    (0.6, 1.3, -2.5, 2.75361903117650686e-01, 1e-11),
    (0.6, 1.3, -1.0, 5.33029043629478338e-01, 1e-11),
    (0.6, 1.3, -0.25, 8.95046880180185411e-01, 1e-11),
    (0.6, 1.3, 0.25, 1.42936678401240047e+00, 1e-11),
    (0.6, 1.3, 1.0, 3.79204059431868368e+00, 1e-11),
    (0.6, 1.3, 2.5, 1.05084241970041660e+02, 1e-11),
    (0.6, 1.3, 5.0, 1.66643182172420202e+06, 1e-11),
    (1.0, 1.5, -5.0, 1.30559211886916798e-01, 1e-11),
    (1.0, 1.5, -2.5, 2.89194711966790474e-01, 1e-11),
    (1.0, 1.5, -1.0, 6.07157705841393724e-01, 1e-11),
    (1.0, 1.5, -0.25, 9.57850345802086944e-01, 1e-11),
    (1.0, 1.5, 0.25, 1.33667014498963121e+00, 1e-11),
    (1.0, 1.5, 1.0, 2.29069825230323820e+00, 1e-11),
    (1.0, 1.5, 2.5, 7.50958750621725013e+00, 1e-11),
    (1.0, 1.5, 5.0, 6.62684830243333067e+01, 1e-11),
    (1.4, 1.7, -5.0, 1.14097672289021068e-01, 1e-11),
    (1.4, 1.7, -2.5, 3.72620421498820187e-01, 1e-11),
    (1.4, 1.7, -1.0, 7.22348662625598159e-01, 1e-11),
    (1.4, 1.7, -0.25, 9.92009960274322977e-01, 1e-11),
    (1.4, 1.7, 0.25, 1.21983746479163813e+00, 1e-11),
    (1.4, 1.7, 1.0, 1.65226708366099340e+00, 1e-11),
    (1.4, 1.7, 2.5, 2.96565002520007726e+00, 1e-11),
    (1.4, 1.7, 5.0, 7.43958484886531579e+00, 1e-11),
    (1.5, 1.75, -5.0, 1.23753648848694692e-01, 1e-09),
    (1.5, 1.75, -2.5, 4.11157895945504281e-01, 1e-09),
    (1.5, 1.75, -1.0, 7.50988718846870240e-01, 1e-09),
    (1.5, 1.75, -0.25, 9.93682392718564067e-01, 1e-09),
    (1.5, 1.75, 0.25, 1.18998704940625588e+00, 1e-09),
    (1.5, 1.75, 1.0, 1.54637895861799501e+00, 1e-09),
    (1.5, 1.75, 2.5, 2.54440255708043228e+00, 1e-09),
    (1.5, 1.75, 5.0, 5.49141630057674135e+00, 1e-09),
    (1.8, 1.9, -5.0, 2.31690271619013899e-01, 1e-09),
    (1.8, 1.9, -2.5, 5.48191960545210688e-01, 1e-09),
    (1.8, 1.9, -1.0, 8.18321436760632959e-01, 1e-09),
    (1.8, 1.9, -0.25, 9.80993305683449446e-01, 1e-09),
    (1.8, 1.9, 0.25, 1.10090322340353830e+00, 1e-09),
    (1.8, 1.9, 1.0, 1.29943652677290289e+00, 1e-09),
    (1.8, 1.9, 2.5, 1.77169220396786509e+00, 1e-09),
    (1.8, 1.9, 5.0, 2.82821172455095571e+00, 1e-09),
    (2.0, 2.0, -5.0, 3.51844907875698998e-01, 1e-11),
    (2.0, 2.0, -2.5, 6.32421706281390383e-01, 1e-11),
    (2.0, 2.0, -1.0, 8.41470984807896505e-01, 1e-11),
    (2.0, 2.0, -0.25, 9.58851077208406011e-01, 1e-11),
    (2.0, 2.0, 0.25, 1.04219061098749477e+00, 1e-11),
    (2.0, 2.0, 1.0, 1.17520119364380138e+00, 1e-11),
    (2.0, 2.0, 2.5, 1.47196033036359397e+00, 1e-11),
    (2.0, 2.0, 5.0, 2.06827144434199806e+00, 1e-11),
    (0.3, 1.0, -8.0, 8.94930958186207215e-02, 1e-09),
    (0.3, 1.0, -15.0, 4.93893982302146262e-02, 1e-09),
    (0.3, 1.0, -30.0, 2.51826175029276622e-02, 1e-09),
    (0.3, 1.0, -80.0, 9.55955792601380708e-03, 1e-09),
    (0.5, 1.0, -10.0, 5.61409927438225875e-02, 1e-09),
    (0.5, 1.0, -15.0, 3.75296063885057624e-02, 1e-09),
    (0.5, 1.0, -30.0, 1.87958888614167506e-02, 1e-09),
    (0.5, 1.0, -80.0, 7.05181895703910298e-03, 1e-09),
    (0.7, 1.0, -15.0, 2.35014402780400165e-02, 1e-09),
    (0.7, 1.0, -30.0, 1.14442515275269725e-02, 1e-09),
    (0.7, 1.0, -80.0, 4.22057152787394096e-03, 1e-09),
    (0.9, 1.0, -15.0, 7.92860243234444657e-03, 1e-09),
    (0.9, 1.0, -27.0, 4.15476521270456180e-03, 1e-09),
    (0.9, 1.0, -80.0, 1.34195494728015321e-03, 1e-09),
    (1.0, 1.0, -12.0, 6.14421235332820981e-06, 1e-09),
];

/// Rows of (alpha, beta, z, exp(-z^(1/alpha)) * E_{alpha,beta}(z), rel_tol).
pub const ML_SCALED_CHECKS: &[(f64, f64, f64, f64, f64)] = &[
    (0.3, 1.0, 3.0, 3.33333333333332416e+00, 1e-12),
    (0.5, 1.0, 5.0, 1.99999999999846256e+00, 1e-12),
    (0.5, 1.0, 6.0, 2.00000000000000000e+00, 1e-12),
    (0.5, 1.0, 30.0, 2.00000000000000000e+00, 1e-12),
    (0.7, 1.0, 10.0, 1.42857142857136665e+00, 1e-12),
    (0.6, 1.3, 20.0, 3.72677996249961285e-01, 1e-12),
    (1.0, 1.0, 50.0, 1.00000000000000000e+00, 1e-13),
    (2.0, 2.0, 2500.0, 1.00000000000000002e-02, 1e-13),
];

/// Rows of (alpha, mu, t, C(mu, t), S(mu, t), rel_tol).
pub const KERNEL_POINT_CHECKS: &[(f64, f64, f64, f64, f64, f64)] = &[
    (0.3, 0.5, 0.5, 2.10447073809239188e-01, 7.43532732942754016e-01, 1e-10),
    (0.5, 2.0, 0.25, 4.16817938007826183e-01, 4.21527815329658107e-02, 1e-10),
    (0.5, 2.0, 0.5, 3.03057579295394230e-01, 1.29784590051744336e-01, 1e-10),
    (0.5, 2.0, 0.9, 9.60667679917760614e-02, 6.68560521803894137e-01, 1e-10),
    (0.7, 5.0, 0.5, 1.33475015804549291e-01, 6.84569795434698033e-03, 1e-10),
    (0.9, 20.0, 0.1, 1.13344958241987023e-01, 1.23560059897048128e-11, 1e-10),
    (0.9, 20.0, 0.95, 4.62416751021470403e-03, 2.47845231548959266e-01, 1e-10),
    (1.0, 3.0, 0.5, 2.12548017471140244e-01, 2.12548017471140244e-01, 1e-11),
    (0.5, 60.0, 0.9, 9.91027175402996001e-03, 4.50802706560710212e-157, 1e-09),
    (0.5, 60.0, 0.999, 9.14966376737869763e-03, 2.73237224472924721e-02, 1e-09),
];
