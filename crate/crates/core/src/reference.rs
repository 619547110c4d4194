//! Reference polynomials used by the verification suites.
//!
//! Moment-variable tables list `(monomial, coefficient)` pairs, a monomial
//! being `(k, power)` pairs for `T_k`. Time-polynomial tables additionally
//! carry the power of `ν = N²`. Coefficients are exact `"p/q"` strings.

#![allow(clippy::type_complexity)]

/// `(monomial, coefficient)` pairs of a polynomial in the moment variables.
pub type MomentTable = &'static [(&'static [(u32, u32)], &'static str)];

/// `(monomial, ν power, coefficient)` triples of a polynomial in the times.
pub type TimesTable = &'static [(&'static [(u32, u32)], u32, &'static str)];

/// Genus-`g` free energies at `N = 0` in moment variables, `g = 2..=9`.
pub const BGW_FREE_ENERGIES: &[(u32, MomentTable)] = &[
    (2, &[(&[(3, 1)], "9/128")]),
    (3, &[(&[(5, 1)], "225/1024"), (&[(3, 2)], "567/1024")]),
    (
        4,
        &[
            (&[(7, 1)], "55125/32768"),
            (&[(3, 1), (5, 1)], "388125/32768"),
            (&[(3, 3)], "64989/4096"),
        ],
    ),
    (
        5,
        &[
            (&[(9, 1)], "6251175/262144"),
            (&[(3, 1), (7, 1)], "14123025/65536"),
            (&[(5, 2)], "28252125/262144"),
            (&[(3, 2), (5, 1)], "70864875/65536"),
            (&[(3, 4)], "130301217/131072"),
        ],
    ),
    (
        6,
        &[
            (&[(11, 1)], "2269176525/4194304"),
            (&[(3, 1), (9, 1)], "25035955875/4194304"),
            (&[(5, 1), (7, 1)], "12519714375/2097152"),
            (&[(3, 1), (5, 2)], "37656646875/1048576"),
            (&[(3, 2), (7, 1)], "18826455375/524288"),
            (&[(3, 3), (5, 1)], "81770259375/524288"),
            (&[(3, 5)], "286765250859/2621440"),
        ],
    ),
    (
        7,
        &[
            (&[(13, 1)], "602628451425/33554432"),
            (&[(3, 1), (11, 1)], "3925999556325/16777216"),
            (&[(5, 1), (9, 1)], "7852650127875/33554432"),
            (&[(7, 2)], "1963178035875/16777216"),
            (&[(3, 1), (5, 1), (7, 1)], "13769702800875/4194304"),
            (&[(3, 2), (9, 1)], "27537582342375/16777216"),
            (&[(5, 3)], "9180336943125/16777216"),
            (&[(3, 2), (5, 2)], "206914899886875/16777216"),
            (&[(3, 3), (7, 1)], "34484117212125/4194304"),
            (&[(3, 4), (5, 1)], "34539827452875/1048576"),
            (&[(3, 6)], "19600404065991/1048576"),
        ],
    ),
    (
        8,
        &[
            (&[(15, 1)], "1762688220418125/2147483648"),
            (&[(3, 1), (13, 1)], "26487328325483025/2147483648"),
            (&[(5, 1), (11, 1)], "26488676216338875/2147483648"),
            (&[(7, 1), (9, 1)], "26488802802632625/2147483648"),
            (&[(3, 1), (5, 1), (9, 1)], "26530744498689375/134217728"),
            (&[(3, 1), (7, 2)], "6632707287504375/67108864"),
            (&[(3, 2), (11, 1)], "13264818560895825/134217728"),
            (&[(5, 2), (7, 1)], "13265904719221875/134217728"),
            (&[(3, 1), (5, 3)], "75280511033859375/134217728"),
            (&[(3, 2), (5, 1), (7, 1)], "112917280552295625/67108864"),
            (&[(3, 3), (9, 1)], "75275622313203375/134217728"),
            (&[(3, 3), (5, 2)], "339191251470703125/67108864"),
            (&[(3, 4), (7, 1)], "169591162989488625/67108864"),
            (&[(3, 5), (5, 1)], "645210015875843625/67108864"),
            (&[(3, 7)], "538246474955839917/117440512"),
        ],
    ),
    (
        9,
        &[
            (&[(17, 1)], "849028159501396875/17179869184"),
            (&[(3, 1), (15, 1)], "1806755425928578125/2147483648"),
            (&[(5, 1), (13, 1)], "3613628364405184125/4294967296"),
            (&[(7, 1), (11, 1)], "1806818862379174875/2147483648"),
            (&[(9, 2)], "7227277861688852625/17179869184"),
            (
                &[(3, 1), (5, 1), (11, 1)],
                "16282250837254450125/1073741824",
            ),
            (&[(3, 1), (7, 1), (9, 1)], "16282283116759356375/1073741824"),
            (&[(3, 2), (13, 1)], "16281810076944587175/2147483648"),
            (&[(5, 1), (7, 2)], "8141354220180706875/1073741824"),
            (&[(5, 2), (9, 1)], "32565363218292436875/4294967296"),
            (
                &[(3, 1), (5, 2), (7, 1)],
                "154866013725681129375/1073741824",
            ),
            (
                &[(3, 2), (5, 1), (9, 1)],
                "309725220277322836875/2147483648",
            ),
            (&[(3, 2), (7, 2)], "77431411127351806875/1073741824"),
            (&[(3, 3), (11, 1)], "51619703670742474575/1073741824"),
            (&[(5, 4)], "103246107731883140625/8589934592"),
            (&[(3, 2), (5, 3)], "258385134479852784375/536870912"),
            (&[(3, 3), (5, 1), (7, 1)], "129190312318002901875/134217728"),
            (&[(3, 4), (9, 1)], "258375760190755743375/1073741824"),
            (&[(3, 4), (5, 2)], "2715656473902641360625/1073741824"),
            (&[(3, 5), (7, 1)], "271561567871335604625/268435456"),
            (&[(3, 6), (5, 1)], "996625993639547388375/268435456"),
        ],
    ),
];

/// Tau-function orders `k = 1..=10` as printed, expanded in the times and `ν`.
/// Orders 2 and 3 are printed with twice the normalization of the others.
pub const TAU_ORDERS: &[(u32, TimesTable)] = &[
    (1, &[(&[(1, 1)], 0, "1/16"), (&[(1, 1)], 1, "-1/4")]),
    (
        2,
        &[
            (&[(1, 2)], 0, "9/256"),
            (&[(1, 2)], 1, "-5/32"),
            (&[(1, 2)], 2, "1/16"),
        ],
    ),
    (
        3,
        &[
            (&[(1, 3)], 0, "51/4096"),
            (&[(1, 3)], 1, "-179/3072"),
            (&[(1, 3)], 2, "9/256"),
            (&[(1, 3)], 3, "-1/192"),
            (&[(3, 1)], 0, "9/512"),
            (&[(3, 1)], 1, "-5/64"),
            (&[(3, 1)], 2, "1/32"),
        ],
    ),
    (
        4,
        &[
            (&[(1, 1), (3, 1)], 0, "225/16384"),
            (&[(1, 1), (3, 1)], 1, "-259/4096"),
            (&[(1, 1), (3, 1)], 2, "35/1024"),
            (&[(1, 1), (3, 1)], 3, "-1/256"),
            (&[(1, 4)], 0, "1275/524288"),
            (&[(1, 4)], 1, "-1157/98304"),
            (&[(1, 4)], 2, "427/49152"),
            (&[(1, 4)], 3, "-13/6144"),
            (&[(1, 4)], 4, "1/6144"),
        ],
    ),
    (
        5,
        &[
            (&[(1, 2), (3, 1)], 0, "7425/524288"),
            (&[(1, 2), (3, 1)], 1, "-2193/32768"),
            (&[(1, 2), (3, 1)], 2, "707/16384"),
            (&[(1, 2), (3, 1)], 3, "-17/2048"),
            (&[(1, 2), (3, 1)], 4, "1/2048"),
            (&[(1, 5)], 0, "8415/8388608"),
            (&[(1, 5)], 1, "-52183/10485760"),
            (&[(1, 5)], 2, "3281/786432"),
            (&[(1, 5)], 3, "-257/196608"),
            (&[(1, 5)], 4, "17/98304"),
            (&[(1, 5)], 5, "-1/122880"),
            (&[(5, 1)], 0, "225/32768"),
            (&[(5, 1)], 1, "-259/8192"),
            (&[(5, 1)], 2, "35/2048"),
            (&[(5, 1)], 3, "-1/512"),
        ],
    ),
    (
        6,
        &[
            (&[(1, 1), (5, 1)], 0, "9225/524288"),
            (&[(1, 1), (5, 1)], 1, "-2711/32768"),
            (&[(1, 1), (5, 1)], 2, "847/16384"),
            (&[(1, 1), (5, 1)], 3, "-19/2048"),
            (&[(1, 1), (5, 1)], 4, "1/2048"),
            (&[(1, 3), (3, 1)], 0, "101475/8388608"),
            (&[(1, 3), (3, 1)], 1, "-122359/2097152"),
            (&[(1, 3), (3, 1)], 2, "33373/786432"),
            (&[(1, 3), (3, 1)], 3, "-2101/196608"),
            (&[(1, 3), (3, 1)], 4, "109/98304"),
            (&[(1, 3), (3, 1)], 5, "-1/24576"),
            (&[(1, 6)], 0, "115005/268435456"),
            (&[(1, 6)], 1, "-1090789/503316480"),
            (&[(1, 6)], 2, "1501759/754974720"),
            (&[(1, 6)], 3, "-2303/3145728"),
            (&[(1, 6)], 4, "1211/9437184"),
            (&[(1, 6)], 5, "-7/655360"),
            (&[(1, 6)], 6, "1/2949120"),
            (&[(3, 2)], 0, "18225/2097152"),
            (&[(3, 2)], 1, "-5301/131072"),
            (&[(3, 2)], 2, "1547/65536"),
            (&[(3, 2)], 3, "-29/8192"),
            (&[(3, 2)], 4, "1/8192"),
        ],
    ),
    (
        7,
        &[
            (&[(1, 1), (3, 2)], 0, "893025/33554432"),
            (&[(1, 1), (3, 2)], 1, "-1057221/8388608"),
            (&[(1, 1), (3, 2)], 2, "86405/1048576"),
            (&[(1, 1), (3, 2)], 3, "-4389/262144"),
            (&[(1, 1), (3, 2)], 4, "165/131072"),
            (&[(1, 1), (3, 2)], 5, "-1/32768"),
            (&[(1, 2), (5, 1)], 0, "452025/16777216"),
            (&[(1, 2), (5, 1)], 1, "-540581/4194304"),
            (&[(1, 2), (5, 1)], 2, "46925/524288"),
            (&[(1, 2), (5, 1)], 3, "-2709/131072"),
            (&[(1, 2), (5, 1)], 4, "125/65536"),
            (&[(1, 2), (5, 1)], 5, "-1/16384"),
            (&[(1, 4), (3, 1)], 0, "4972275/536870912"),
            (&[(1, 4), (3, 1)], 1, "-3048533/67108864"),
            (&[(1, 4), (3, 1)], 2, "3637631/100663296"),
            (&[(1, 4), (3, 1)], 3, "-68161/6291456"),
            (&[(1, 4), (3, 1)], 4, "3181/2097152"),
            (&[(1, 4), (3, 1)], 5, "-79/786432"),
            (&[(1, 4), (3, 1)], 6, "1/393216"),
            (&[(1, 7)], 0, "805035/4294967296"),
            (&[(1, 7)], 1, "-108622397/112742891520"),
            (&[(1, 7)], 2, "2289455/2415919104"),
            (&[(1, 7)], 3, "-1181797/3019898880"),
            (&[(1, 7)], 4, "12425/150994944"),
            (&[(1, 7)], 5, "-1747/188743680"),
            (&[(1, 7)], 6, "5/9437184"),
            (&[(1, 7)], 7, "-1/82575360"),
            (&[(7, 1)], 0, "55125/4194304"),
            (&[(7, 1)], 1, "-16145/262144"),
            (&[(7, 1)], 2, "4935/131072"),
            (&[(7, 1)], 3, "-105/16384"),
            (&[(7, 1)], 4, "5/16384"),
        ],
    ),
    (
        8,
        &[
            (&[(1, 1), (7, 1)], 0, "3142125/67108864"),
            (&[(1, 1), (7, 1)], 1, "-3736185/16777216"),
            (&[(1, 1), (7, 1)], 2, "313585/2097152"),
            (&[(1, 1), (7, 1)], 3, "-16905/524288"),
            (&[(1, 1), (7, 1)], 4, "705/262144"),
            (&[(1, 1), (7, 1)], 5, "-5/65536"),
            (&[(1, 2), (3, 2)], 0, "50902425/1073741824"),
            (&[(1, 2), (3, 2)], 1, "-30577311/134217728"),
            (&[(1, 2), (3, 2)], 2, "10907391/67108864"),
            (&[(1, 2), (3, 2)], 3, "-168289/4194304"),
            (&[(1, 2), (3, 2)], 4, "18183/4194304"),
            (&[(1, 2), (3, 2)], 5, "-111/524288"),
            (&[(1, 2), (3, 2)], 6, "1/262144"),
            (&[(1, 3), (5, 1)], 0, "8588475/268435456"),
            (&[(1, 3), (5, 1)], 1, "-5210857/33554432"),
            (&[(1, 3), (5, 1)], 2, "5890031/50331648"),
            (&[(1, 3), (5, 1)], 3, "-100669/3145728"),
            (&[(1, 3), (5, 1)], 4, "4181/1048576"),
            (&[(1, 3), (5, 1)], 5, "-91/393216"),
            (&[(1, 3), (5, 1)], 6, "1/196608"),
            (&[(1, 5), (3, 1)], 0, "56683935/8589934592"),
            (&[(1, 5), (3, 1)], 1, "-352505037/10737418240"),
            (&[(1, 5), (3, 1)], 2, "15042411/536870912"),
            (&[(1, 5), (3, 1)], 3, "-19178339/2013265920"),
            (&[(1, 5), (3, 1)], 4, "163319/100663296"),
            (&[(1, 5), (3, 1)], 5, "-6183/41943040"),
            (&[(1, 5), (3, 1)], 6, "43/6291456"),
            (&[(1, 5), (3, 1)], 7, "-1/7864320"),
            (&[(1, 8)], 0, "45886995/549755813888"),
            (&[(1, 8)], 1, "-261500221/601295421440"),
            (&[(1, 8)], 2, "135925831/300647710720"),
            (&[(1, 8)], 3, "-9851213/48318382080"),
            (&[(1, 8)], 4, "2361461/48318382080"),
            (&[(1, 8)], 5, "-20213/3019898880"),
            (&[(1, 8)], 6, "793/1509949440"),
            (&[(1, 8)], 7, "-29/1321205760"),
            (&[(1, 8)], 8, "1/2642411520"),
            (&[(3, 1), (5, 1)], 0, "1554525/33554432"),
            (&[(3, 1), (5, 1)], 1, "-1832181/8388608"),
            (&[(3, 1), (5, 1)], 2, "145625/1048576"),
            (&[(3, 1), (5, 1)], 3, "-6909/262144"),
            (&[(3, 1), (5, 1)], 4, "225/131072"),
            (&[(3, 1), (5, 1)], 5, "-1/32768"),
        ],
    ),
    (
        9,
        &[
            (&[(1, 1), (3, 1), (5, 1)], 0, "101044125/536870912"),
            (&[(1, 1), (3, 1), (5, 1)], 1, "-60323145/67108864"),
            (&[(1, 1), (3, 1), (5, 1)], 2, "20763431/33554432"),
            (&[(1, 1), (3, 1), (5, 1)], 3, "-297355/2097152"),
            (&[(1, 1), (3, 1), (5, 1)], 4, "28443/2097152"),
            (&[(1, 1), (3, 1), (5, 1)], 5, "-145/262144"),
            (&[(1, 1), (3, 1), (5, 1)], 6, "1/131072"),
            (&[(1, 2), (7, 1)], 0, "204238125/2147483648"),
            (&[(1, 2), (7, 1)], 1, "-122997075/268435456"),
            (&[(1, 2), (7, 1)], 2, "44502235/134217728"),
            (&[(1, 2), (7, 1)], 3, "-706205/8388608"),
            (&[(1, 2), (7, 1)], 4, "79635/8388608"),
            (&[(1, 2), (7, 1)], 5, "-515/1048576"),
            (&[(1, 2), (7, 1)], 6, "5/524288"),
            (&[(1, 3), (3, 2)], 0, "1102885875/17179869184"),
            (&[(1, 3), (3, 2)], 1, "-1341984285/4294967296"),
            (&[(1, 3), (3, 2)], 2, "256711679/1073741824"),
            (&[(1, 3), (3, 2)], 3, "-54662531/805306368"),
            (&[(1, 3), (3, 2)], 4, "1855051/201326592"),
            (&[(1, 3), (3, 2)], 5, "-10871/16777216"),
            (&[(1, 3), (3, 2)], 6, "287/12582912"),
            (&[(1, 3), (3, 2)], 7, "-1/3145728"),
            (&[(1, 4), (5, 1)], 0, "558250875/17179869184"),
            (&[(1, 4), (5, 1)], 1, "-685999885/4294967296"),
            (&[(1, 4), (5, 1)], 2, "414117157/3221225472"),
            (&[(1, 4), (5, 1)], 3, "-32063971/805306368"),
            (&[(1, 4), (5, 1)], 4, "1217971/201326592"),
            (&[(1, 4), (5, 1)], 5, "-24373/50331648"),
            (&[(1, 4), (5, 1)], 6, "247/12582912"),
            (&[(1, 4), (5, 1)], 7, "-1/3145728"),
            (&[(1, 6), (3, 1)], 0, "1228151925/274877906944"),
            (&[(1, 6), (3, 1)], 1, "-193302059/8589934592"),
            (&[(1, 6), (3, 1)], 2, "436774051/21474836480"),
            (&[(1, 6), (3, 1)], 3, "-36805705/4831838208"),
            (&[(1, 6), (3, 1)], 4, "36128507/24159191040"),
            (&[(1, 6), (3, 1)], 5, "-50557/301989888"),
            (&[(1, 6), (3, 1)], 6, "8131/754974720"),
            (&[(1, 6), (3, 1)], 7, "-7/18874368"),
            (&[(1, 6), (3, 1)], 8, "1/188743680"),
            (&[(1, 9)], 0, "331406075/8796093022208"),
            (&[(1, 9)], 1, "-27517231949/138538465099776"),
            (&[(1, 9)], 2, "9358179457/43293270343680"),
            (&[(1, 9)], 3, "-10187936309/97409858273280"),
            (&[(1, 9)], 4, "21433313/773094113280"),
            (&[(1, 9)], 5, "-2538947/579820584960"),
            (&[(1, 9)], 6, "10219/24159191040"),
            (&[(1, 9)], 7, "-3107/126835752960"),
            (&[(1, 9)], 8, "11/14092861440"),
            (&[(1, 9)], 9, "-1/95126814720"),
            (&[(3, 3)], 0, "66712275/2147483648"),
            (&[(3, 3)], 1, "-39507333/268435456"),
            (&[(3, 3)], 2, "12955797/134217728"),
            (&[(3, 3)], 3, "-499921/25165824"),
            (&[(3, 3)], 4, "13261/8388608"),
            (&[(3, 3)], 5, "-53/1048576"),
            (&[(3, 3)], 6, "1/1572864"),
            (&[(9, 1)], 0, "6251175/134217728"),
            (&[(9, 1)], 1, "-7400547/33554432"),
            (&[(9, 1)], 2, "604835/4194304"),
            (&[(9, 1)], 3, "-30723/1048576"),
            (&[(9, 1)], 4, "1155/524288"),
            (&[(9, 1)], 5, "-7/131072"),
        ],
    ),
    (
        10,
        &[
            (&[(1, 1), (3, 3)], 0, "4869996075/34359738368"),
            (&[(1, 1), (3, 3)], 1, "-5834782893/8589934592"),
            (&[(1, 1), (3, 3)], 2, "1024787847/2147483648"),
            (&[(1, 1), (3, 3)], 3, "-184844323/1610612736"),
            (&[(1, 1), (3, 3)], 4, "4903843/402653184"),
            (&[(1, 1), (3, 3)], 5, "-20999/33554432"),
            (&[(1, 1), (3, 3)], 6, "391/25165824"),
            (&[(1, 1), (3, 3)], 7, "-1/6291456"),
            (&[(1, 1), (9, 1)], 0, "456335775/2147483648"),
            (&[(1, 1), (9, 1)], 1, "-273245553/268435456"),
            (&[(1, 1), (9, 1)], 2, "95706457/134217728"),
            (&[(1, 1), (9, 1)], 3, "-1423807/8388608"),
            (&[(1, 1), (9, 1)], 4, "145761/8388608"),
            (&[(1, 1), (9, 1)], 5, "-833/1048576"),
            (&[(1, 1), (9, 1)], 6, "7/524288"),
            (&[(1, 2), (3, 1), (5, 1)], 0, "7376221125/17179869184"),
            (&[(1, 2), (3, 1), (5, 1)], 1, "-8908223295/4294967296"),
            (&[(1, 2), (3, 1), (5, 1)], 2, "1636376753/1073741824"),
            (&[(1, 2), (3, 1), (5, 1)], 3, "-107591091/268435456"),
            (&[(1, 2), (3, 1), (5, 1)], 4, "3265759/67108864"),
            (&[(1, 2), (3, 1), (5, 1)], 5, "-49613/16777216"),
            (&[(1, 2), (3, 1), (5, 1)], 6, "363/4194304"),
            (&[(1, 2), (3, 1), (5, 1)], 7, "-1/1048576"),
            (&[(1, 3), (7, 1)], 0, "4969794375/34359738368"),
            (&[(1, 3), (7, 1)], 1, "-6053937025/8589934592"),
            (&[(1, 3), (7, 1)], 2, "3494657305/6442450944"),
            (&[(1, 3), (7, 1)], 3, "-83571365/536870912"),
            (&[(1, 3), (7, 1)], 4, "8638175/402653184"),
            (&[(1, 3), (7, 1)], 5, "-154825/100663296"),
            (&[(1, 3), (7, 1)], 6, "465/8388608"),
            (&[(1, 3), (7, 1)], 7, "-5/6291456"),
            (&[(1, 4), (3, 2)], 0, "80510668875/1099511627776"),
            (&[(1, 4), (3, 2)], 1, "-12383467335/34359738368"),
            (&[(1, 4), (3, 2)], 2, "5020484213/17179869184"),
            (&[(1, 4), (3, 2)], 3, "-595062475/6442450944"),
            (&[(1, 4), (3, 2)], 4, "31680209/2147483648"),
            (&[(1, 4), (3, 2)], 5, "-529475/402653184"),
            (&[(1, 4), (3, 2)], 6, "13391/201326592"),
            (&[(1, 4), (3, 2)], 7, "-15/8388608"),
            (&[(1, 4), (3, 2)], 8, "1/50331648"),
            (&[(1, 5), (5, 1)], 0, "8150462775/274877906944"),
            (&[(1, 5), (5, 1)], 1, "-632953031/4294967296"),
            (&[(1, 5), (5, 1)], 2, "8072138029/64424509440"),
            (&[(1, 5), (5, 1)], 3, "-17217419/402653184"),
            (&[(1, 5), (5, 1)], 4, "60487927/8053063680"),
            (&[(1, 5), (5, 1)], 5, "-37465/50331648"),
            (&[(1, 5), (5, 1)], 6, "10601/251658240"),
            (&[(1, 5), (5, 1)], 7, "-1/786432"),
            (&[(1, 5), (5, 1)], 8, "1/62914560"),
            (&[(1, 7), (3, 1)], 0, "12807870075/4398046511104"),
            (&[(1, 7), (3, 1)], 1, "-114116554381/7696581394432"),
            (&[(1, 7), (3, 1)], 2, "33817526313/2405181685760"),
            (&[(1, 7), (3, 1)], 3, "-30799131109/5411658792960"),
            (&[(1, 7), (3, 1)], 4, "481927873/386547056640"),
            (&[(1, 7), (3, 1)], 5, "-15705961/96636764160"),
            (&[(1, 7), (3, 1)], 6, "157019/12079595520"),
            (&[(1, 7), (3, 1)], 7, "-13241/21139292160"),
            (&[(1, 7), (3, 1)], 8, "353/21139292160"),
            (&[(1, 7), (3, 1)], 9, "-1/5284823040"),
            (&[(1, 10)], 0, "4838528695/281474976710656"),
            (&[(1, 10)], 1, "-1014818257501/11083077207982080"),
            (&[(1, 10)], 2, "2870174561189/27707693019955200"),
            (&[(1, 10)], 3, "-82794296567/1558557732372480"),
            (&[(1, 10)], 4, "23789535821/1558557732372480"),
            (&[(1, 10)], 5, "-24964307/9277129359360"),
            (&[(1, 10)], 6, "7014869/23192823398400"),
            (&[(1, 10)], 7, "-44141/2029372047360"),
            (&[(1, 10)], 8, "3931/4058744094720"),
            (&[(1, 10)], 9, "-37/1522029035520"),
            (&[(1, 10)], 10, "1/3805072588800"),
            (&[(3, 1), (7, 1)], 0, "904369725/4294967296"),
            (&[(3, 1), (7, 1)], 1, "-537427707/536870912"),
            (&[(3, 1), (7, 1)], 2, "179985275/268435456"),
            (&[(3, 1), (7, 1)], 3, "-2426693/16777216"),
            (&[(3, 1), (7, 1)], 4, "208995/16777216"),
            (&[(3, 1), (7, 1)], 5, "-907/2097152"),
            (&[(3, 1), (7, 1)], 6, "5/1048576"),
            (&[(5, 2)], 0, "226067625/2147483648"),
            (&[(5, 2)], 1, "-134328615/268435456"),
            (&[(5, 2)], 2, "44956831/134217728"),
            (&[(5, 2)], 3, "-604585/8388608"),
            (&[(5, 2)], 4, "51543/8388608"),
            (&[(5, 2)], 5, "-215/1048576"),
            (&[(5, 2)], 6, "1/524288"),
        ],
    ),
];

/// Polynomial tau-functions at `N = l + 1/2` as printed, `(l, table)`, `ħ = 1`.
pub const TRIANGULAR_TAUS: &[(u32, TimesTable)] = &[
    (1, &[(&[], 0, "1"), (&[(1, 1)], 0, "-1/2")]),
    (
        2,
        &[
            (&[], 0, "1"),
            (&[(1, 1)], 0, "-3/2"),
            (&[(1, 2)], 0, "3/4"),
            (&[(3, 1)], 0, "3/8"),
            (&[(1, 3)], 0, "-1/8"),
        ],
    ),
];

/// Pieces `F̃_g^{(k)}` of the genus expansion in moment variables, as `(g, k, table)`.
pub const MOMENT_FREE_ENERGIES: &[(u32, u32, MomentTable)] = &[
    (0, 1, &[]),
    (0, 2, &[(&[(3, 1)], "1/8")]),
    (0, 3, &[(&[(5, 1)], "1/16"), (&[(3, 2)], "3/16")]),
    (
        0,
        4,
        &[
            (&[(7, 1)], "5/128"),
            (&[(3, 1), (5, 1)], "45/128"),
            (&[(3, 3)], "9/16"),
        ],
    ),
    (
        0,
        5,
        &[
            (&[(9, 1)], "7/256"),
            (&[(3, 1), (7, 1)], "21/64"),
            (&[(5, 2)], "45/256"),
            (&[(3, 2), (5, 1)], "135/64"),
            (&[(3, 4)], "297/128"),
        ],
    ),
    (
        0,
        6,
        &[
            (&[(11, 1)], "21/1024"),
            (&[(3, 1), (9, 1)], "315/1024"),
            (&[(5, 1), (7, 1)], "175/512"),
            (&[(3, 1), (5, 2)], "675/256"),
            (&[(3, 2), (7, 1)], "315/128"),
            (&[(3, 3), (5, 1)], "1755/128"),
            (&[(3, 5)], "7371/640"),
        ],
    ),
    (
        0,
        7,
        &[
            (&[(13, 1)], "33/2048"),
            (&[(3, 1), (11, 1)], "297/1024"),
            (&[(5, 1), (9, 1)], "675/2048"),
            (&[(7, 2)], "175/1024"),
            (&[(3, 1), (5, 1), (7, 1)], "1575/256"),
            (&[(3, 2), (9, 1)], "2835/1024"),
            (&[(5, 3)], "1125/1024"),
            (&[(3, 2), (5, 2)], "30375/1024"),
            (&[(3, 3), (7, 1)], "4725/256"),
            (&[(3, 4), (5, 1)], "6075/64"),
            (&[(3, 6)], "4131/64"),
        ],
    ),
    (
        0,
        8,
        &[
            (&[(15, 1)], "429/32768"),
            (&[(3, 1), (13, 1)], "9009/32768"),
            (&[(5, 1), (11, 1)], "10395/32768"),
            (&[(7, 1), (9, 1)], "11025/32768"),
            (&[(3, 1), (5, 1), (9, 1)], "14175/2048"),
            (&[(3, 1), (7, 2)], "3675/1024"),
            (&[(3, 2), (11, 1)], "6237/2048"),
            (&[(5, 2), (7, 1)], "7875/2048"),
            (&[(3, 1), (5, 3)], "57375/2048"),
            (&[(3, 2), (5, 1), (7, 1)], "80325/1024"),
            (&[(3, 3), (9, 1)], "48195/2048"),
            (&[(3, 3), (5, 2)], "309825/1024"),
            (&[(3, 4), (7, 1)], "144585/1024"),
            (&[(3, 5), (5, 1)], "706401/1024"),
            (&[(3, 7)], "706401/1792"),
        ],
    ),
    (1, 1, &[(&[(3, 1)], "5/16")]),
    (1, 2, &[(&[(5, 1)], "35/64"), (&[(3, 2)], "93/64")]),
    (
        1,
        3,
        &[
            (&[(7, 1)], "105/128"),
            (&[(3, 1), (5, 1)], "825/128"),
            (&[(3, 3)], "75/8"),
        ],
    ),
    (
        1,
        4,
        &[
            (&[(9, 1)], "1155/1024"),
            (&[(3, 1), (7, 1)], "3045/256"),
            (&[(5, 2)], "6225/1024"),
            (&[(3, 2), (5, 1)], "17415/256"),
            (&[(3, 4)], "35397/512"),
        ],
    ),
    (
        1,
        5,
        &[
            (&[(11, 1)], "3003/2048"),
            (&[(3, 1), (9, 1)], "40005/2048"),
            (&[(5, 1), (7, 1)], "20825/1024"),
            (&[(3, 1), (5, 2)], "73125/512"),
            (&[(3, 2), (7, 1)], "35595/256"),
            (&[(3, 3), (5, 1)], "178875/256"),
            (&[(3, 5)], "140373/256"),
        ],
    ),
    (
        1,
        6,
        &[
            (&[(13, 1)], "15015/8192"),
            (&[(3, 1), (11, 1)], "121275/4096"),
            (&[(5, 1), (9, 1)], "256725/8192"),
            (&[(7, 2)], "64925/4096"),
            (&[(3, 1), (5, 1), (7, 1)], "542325/1024"),
            (&[(3, 2), (9, 1)], "1036665/4096"),
            (&[(5, 3)], "373875/4096"),
            (&[(3, 2), (5, 2)], "9605925/4096"),
            (&[(3, 3), (7, 1)], "1552635/1024"),
            (&[(3, 4), (5, 1)], "1819665/256"),
            (&[(3, 6)], "1165509/256"),
        ],
    ),
    (
        1,
        7,
        &[
            (&[(15, 1)], "36465/16384"),
            (&[(3, 1), (13, 1)], "693693/16384"),
            (&[(5, 1), (11, 1)], "744975/16384"),
            (&[(7, 1), (9, 1)], "760725/16384"),
            (&[(3, 1), (5, 1), (9, 1)], "921375/1024"),
            (&[(3, 1), (7, 2)], "466725/1024"),
            (&[(3, 2), (11, 1)], "866943/2048"),
            (&[(5, 2), (7, 1)], "485625/1024"),
            (&[(3, 1), (5, 3)], "3290625/1024"),
            (&[(3, 2), (5, 1), (7, 1)], "9520875/1024"),
            (&[(3, 3), (9, 1)], "6041385/2048"),
            (&[(3, 3), (5, 2)], "33969375/1024"),
            (&[(3, 4), (7, 1)], "513135/32"),
            (&[(3, 5), (5, 1)], "9218205/128"),
            (&[(3, 7)], "69903081/1792"),
        ],
    ),
    (2, 1, &[(&[(5, 1)], "259/256"), (&[(3, 2)], "657/256")]),
    (
        2,
        2,
        &[
            (&[(7, 1)], "4935/1024"),
            (&[(3, 1), (5, 1)], "36015/1024"),
            (&[(3, 3)], "6201/128"),
        ],
    ),
    (
        2,
        3,
        &[
            (&[(9, 1)], "30723/2048"),
            (&[(3, 1), (7, 1)], "74529/512"),
            (&[(5, 2)], "149985/2048"),
            (&[(3, 2), (5, 1)], "397035/512"),
            (&[(3, 4)], "765693/1024"),
        ],
    ),
    (
        2,
        4,
        &[
            (&[(11, 1)], "603603/16384"),
            (&[(3, 1), (9, 1)], "7390845/16384"),
            (&[(5, 1), (7, 1)], "3744825/8192"),
            (&[(3, 1), (5, 2)], "12284325/4096"),
            (&[(3, 2), (7, 1)], "6086745/2048"),
            (&[(3, 3), (5, 1)], "28598265/2048"),
            (&[(3, 5)], "106851717/10240"),
        ],
    ),
    (
        2,
        5,
        &[
            (&[(13, 1)], "2543541/32768"),
            (&[(3, 1), (11, 1)], "18927909/16384"),
            (&[(5, 1), (9, 1)], "38701215/32768"),
            (&[(7, 2)], "9707635/16384"),
            (&[(3, 1), (5, 1), (7, 1)], "76102635/4096"),
            (&[(3, 2), (9, 1)], "149588775/16384"),
            (&[(5, 3)], "51448425/16384"),
            (&[(3, 2), (5, 2)], "1265323275/16384"),
            (&[(3, 3), (7, 1)], "208346985/4096"),
            (&[(3, 4), (5, 1)], "229158315/1024"),
            (&[(3, 6)], "140271507/1024"),
        ],
    ),
    (
        2,
        6,
        &[
            (&[(15, 1)], "19246227/131072"),
            (&[(3, 1), (13, 1)], "338585247/131072"),
            (&[(5, 1), (11, 1)], "349538805/131072"),
            (&[(7, 1), (9, 1)], "351871695/131072"),
            (&[(3, 1), (5, 1), (9, 1)], "402291225/8192"),
            (&[(3, 1), (7, 2)], "50498175/2048"),
            (&[(3, 2), (11, 1)], "97956243/4096"),
            (&[(5, 2), (7, 1)], "205991625/8192"),
            (&[(3, 1), (5, 3)], "1317331125/8192"),
            (&[(3, 2), (5, 1), (7, 1)], "971414325/2048"),
            (&[(3, 3), (9, 1)], "634027905/4096"),
            (&[(3, 3), (5, 2)], "3266594325/2048"),
            (&[(3, 4), (7, 1)], "3217790205/4096"),
            (&[(3, 5), (5, 1)], "13610282013/4096"),
            (&[(3, 7)], "441784935/256"),
        ],
    ),
    (
        3,
        1,
        &[
            (&[(7, 1)], "16145/2048"),
            (&[(3, 1), (5, 1)], "114225/2048"),
            (&[(3, 3)], "75/1"),
        ],
    ),
    (
        3,
        2,
        &[
            (&[(9, 1)], "604835/8192"),
            (&[(3, 1), (7, 1)], "1399965/2048"),
            (&[(5, 2)], "2804625/8192"),
            (&[(3, 2), (5, 1)], "7170255/2048"),
            (&[(3, 4)], "13407093/4096"),
        ],
    ),
    (
        3,
        3,
        &[
            (&[(11, 1)], "6483477/16384"),
            (&[(3, 1), (9, 1)], "75131595/16384"),
            (&[(5, 1), (7, 1)], "37711975/8192"),
            (&[(3, 1), (5, 2)], "118222875/4096"),
            (&[(3, 2), (7, 1)], "58951305/2048"),
            (&[(3, 3), (5, 1)], "265649625/2048"),
            (&[(3, 5)], "192117987/2048"),
        ],
    ),
    (
        3,
        4,
        &[
            (&[(13, 1)], "201052995/131072"),
            (&[(3, 1), (11, 1)], "1411098975/65536"),
            (&[(5, 1), (9, 1)], "2843426025/131072"),
            (&[(7, 2)], "711506425/65536"),
            (&[(3, 1), (5, 1), (7, 1)], "5317009425/16384"),
            (&[(3, 2), (9, 1)], "10571621445/65536"),
            (&[(5, 3)], "3562329375/65536"),
            (&[(3, 2), (5, 2)], "84554265825/65536"),
            (&[(3, 3), (7, 1)], "14033060055/16384"),
            (&[(3, 4), (5, 1)], "14797367145/4096"),
            (&[(3, 6)], "8767078173/4096"),
        ],
    ),
    (
        3,
        5,
        &[
            (&[(15, 1)], "1256693295/262144"),
            (&[(3, 1), (13, 1)], "20835465651/262144"),
            (&[(5, 1), (11, 1)], "21099663585/262144"),
            (&[(7, 1), (9, 1)], "21140849835/262144"),
            (&[(3, 1), (5, 1), (9, 1)], "23039048025/16384"),
            (&[(3, 1), (7, 2)], "11533969125/16384"),
            (&[(3, 2), (11, 1)], "22803571791/32768"),
            (&[(5, 2), (7, 1)], "11630143875/16384"),
            (&[(3, 1), (5, 3)], "71155771875/16384"),
            (&[(3, 2), (5, 1), (7, 1)], "211982823675/16384"),
            (&[(3, 3), (9, 1)], "140161531545/32768"),
            (&[(3, 3), (5, 2)], "682677669375/16384"),
            (&[(3, 4), (7, 1)], "84821501835/4096"),
            (&[(3, 5), (5, 1)], "344109377925/4096"),
            (&[(3, 7)], "1211928290217/28672"),
        ],
    ),
    (
        4,
        1,
        &[
            (&[(9, 1)], "7400547/65536"),
            (&[(3, 1), (7, 1)], "16776921/16384"),
            (&[(5, 2)], "33567585/65536"),
            (&[(3, 2), (5, 1)], "84428595/16384"),
            (&[(3, 4)], "155619117/32768"),
        ],
    ),
    (
        4,
        2,
        &[
            (&[(11, 1)], "461311851/262144"),
            (&[(3, 1), (9, 1)], "5177752965/262144"),
            (&[(5, 1), (7, 1)], "2591640625/131072"),
            (&[(3, 1), (5, 2)], "7910056125/65536"),
            (&[(3, 2), (7, 1)], "3952037565/32768"),
            (&[(3, 3), (5, 1)], "17389528605/32768"),
            (&[(3, 5)], "61659550053/163840"),
        ],
    ),
    (
        4,
        3,
        &[
            (&[(13, 1)], "7612223619/524288"),
            (&[(3, 1), (11, 1)], "51393633291/262144"),
            (&[(5, 1), (9, 1)], "103019276745/524288"),
            (&[(7, 2)], "25761027005/262144"),
            (&[(3, 1), (5, 1), (7, 1)], "186325900005/65536"),
            (&[(3, 2), (9, 1)], "371988099945/262144"),
            (&[(5, 3)], "124408920975/262144"),
            (&[(3, 2), (5, 2)], "2877392953125/262144"),
            (&[(3, 3), (7, 1)], "478941497055/65536"),
            (&[(3, 4), (5, 1)], "491651138745/16384"),
            (&[(3, 6)], "284951872593/16384"),
        ],
    ),
    (
        4,
        4,
        &[
            (&[(15, 1)], "343519458711/4194304"),
            (&[(3, 1), (13, 1)], "5457509668611/4194304"),
            (&[(5, 1), (11, 1)], "5481470419425/4194304"),
            (&[(7, 1), (9, 1)], "5484436521795/4194304"),
            (&[(3, 1), (5, 1), (9, 1)], "5765593974525/262144"),
            (&[(3, 1), (7, 2)], "1441907245275/131072"),
            (&[(3, 2), (11, 1)], "2872551695013/262144"),
            (&[(5, 2), (7, 1)], "2892529880625/262144"),
            (&[(3, 1), (5, 3)], "17136214183125/262144"),
            (&[(3, 2), (5, 1), (7, 1)], "25639814092725/131072"),
            (&[(3, 3), (9, 1)], "17044272862155/262144"),
            (&[(3, 3), (5, 2)], "80106396840225/131072"),
            (&[(3, 4), (7, 1)], "39967361286615/131072"),
            (&[(3, 5), (5, 1)], "157614682018959/131072"),
            (&[(3, 7)], "19375419429891/32768"),
        ],
    ),
    (
        5,
        1,
        &[
            (&[(11, 1)], "1352576043/524288"),
            (&[(3, 1), (9, 1)], "14960246805/524288"),
            (&[(5, 1), (7, 1)], "7482105225/262144"),
            (&[(3, 1), (5, 2)], "22552975125/131072"),
            (&[(3, 2), (7, 1)], "11274351795/65536"),
            (&[(3, 3), (5, 1)], "49062715875/65536"),
            (&[(3, 5)], "34468789653/65536"),
        ],
    ),
    (
        5,
        2,
        &[
            (&[(13, 1)], "126762200565/2097152"),
            (&[(3, 1), (11, 1)], "836393983425/1048576"),
            (&[(5, 1), (9, 1)], "1673842629375/2097152"),
            (&[(7, 2)], "418486752775/1048576"),
            (&[(3, 1), (5, 1), (7, 1)], "2967884007375/262144"),
            (&[(3, 2), (9, 1)], "5932794319515/1048576"),
            (&[(5, 3)], "1979457545625/1048576"),
            (&[(3, 2), (5, 2)], "45038717337375/1048576"),
            (&[(3, 3), (7, 1)], "7503673495185/262144"),
            (&[(3, 4), (5, 1)], "7582592016315/65536"),
            (&[(3, 6)], "4336231722327/65536"),
        ],
    ),
    (
        5,
        3,
        &[
            (&[(15, 1)], "2989207836615/4194304"),
            (&[(3, 1), (13, 1)], "46148268185019/4194304"),
            (&[(5, 1), (11, 1)], "46210569510105/4194304"),
            (&[(7, 1), (9, 1)], "46217234012355/4194304"),
            (&[(3, 1), (5, 1), (9, 1)], "47401263300825/262144"),
            (&[(3, 1), (7, 2)], "23702887069575/262144"),
            (&[(3, 2), (11, 1)], "47349163650789/524288"),
            (&[(5, 2), (7, 1)], "23725543608375/262144"),
            (&[(3, 1), (5, 3)], "137510048829375/262144"),
            (&[(3, 2), (5, 1), (7, 1)], "412202168102025/262144"),
            (&[(3, 3), (9, 1)], "274556802988755/524288"),
            (&[(3, 3), (5, 2)], "1262180334313125/262144"),
            (&[(3, 4), (7, 1)], "78832872717795/32768"),
            (&[(3, 5), (5, 1)], "152599213285155/16384"),
            (&[(3, 7)], "295477654037589/65536"),
        ],
    ),
    (
        6,
        1,
        &[
            (&[(13, 1)], "721976952807/8388608"),
            (&[(3, 1), (11, 1)], "4712392198503/4194304"),
            (&[(5, 1), (9, 1)], "9426278461365/8388608"),
            (&[(7, 2)], "2356605625185/4194304"),
            (&[(3, 1), (5, 1), (7, 1)], "16556502355785/1048576"),
            (&[(3, 2), (9, 1)], "33108811628445/4194304"),
            (&[(5, 3)], "11038896821475/4194304"),
            (&[(3, 2), (5, 2)], "249159522789225/4194304"),
            (&[(3, 3), (7, 1)], "41522675471235/1048576"),
            (&[(3, 4), (5, 1)], "41645338352865/262144"),
            (&[(3, 6)], "23660311883769/262144"),
        ],
    ),
    (
        6,
        2,
        &[
            (&[(15, 1)], "95041284259779/33554432"),
            (&[(3, 1), (13, 1)], "1442169677387439/33554432"),
            (&[(5, 1), (11, 1)], "1442721973704165/33554432"),
            (&[(7, 1), (9, 1)], "1442776147146495/33554432"),
            (&[(3, 1), (5, 1), (9, 1)], "1457590887545625/2097152"),
            (&[(3, 1), (7, 2)], "11387713000125/32768"),
            (&[(3, 2), (11, 1)], "182141818558623/524288"),
            (&[(5, 2), (7, 1)], "729014470760625/2097152"),
            (&[(3, 1), (5, 3)], "4169029399318125/2097152"),
            (&[(3, 2), (5, 1), (7, 1)], "781513453641375/131072"),
            (&[(3, 3), (9, 1)], "1041752546225055/524288"),
            (&[(3, 3), (5, 2)], "1182045374663625/65536"),
            (&[(3, 4), (7, 1)], "9454513725058185/1048576"),
            (&[(3, 5), (5, 1)], "36199921141511001/1048576"),
            (&[(3, 7)], "15185336065870311/917504"),
        ],
    ),
    (
        7,
        1,
        &[
            (&[(15, 1)], "264952094603625/67108864"),
            (&[(3, 1), (13, 1)], "3987196321745637/67108864"),
            (&[(5, 1), (11, 1)], "3987584386351335/67108864"),
            (&[(7, 1), (9, 1)], "3987621333347085/67108864"),
            (&[(3, 1), (5, 1), (9, 1)], "3999155802479775/4194304"),
            (&[(3, 1), (7, 2)], "1999590270994575/4194304"),
            (&[(3, 2), (11, 1)], "3998836418130477/8388608"),
            (&[(5, 2), (7, 1)], "1999731386512125/4194304"),
            (&[(3, 1), (5, 3)], "11361282083218125/4194304"),
            (&[(3, 2), (5, 1), (7, 1)], "34081835456653425/4194304"),
            (&[(3, 3), (9, 1)], "22719742197138315/8388608"),
            (&[(3, 3), (5, 2)], "102487735548028125/4194304"),
            (&[(3, 4), (7, 1)], "12810322271682495/1048576"),
            (&[(3, 5), (5, 1)], "48784570534530045/1048576"),
            (&[(3, 7)], "23275794518914797/1048576"),
        ],
    ),
];

/// Genus-`g` free energies at generic `N` written as `Σ_k B_k(N) F_{g,k}(T)`, as `(g, k, F_{g,k})`.
pub const B_DECOMPOSITIONS: &[(u32, u32, MomentTable)] = &[
    (2, 2, &[(&[(3, 1)], "1/128")]),
    (3, 3, &[(&[(5, 1)], "1/1024"), (&[(3, 2)], "3/1024")]),
    (3, 2, &[(&[(3, 2)], "-3/256")]),
    (
        4,
        4,
        &[
            (&[(7, 1)], "5/32768"),
            (&[(3, 1), (5, 1)], "45/32768"),
            (&[(3, 3)], "9/4096"),
        ],
    ),
    (
        4,
        3,
        &[(&[(3, 1), (5, 1)], "-15/1024"), (&[(3, 3)], "-39/1024")],
    ),
    (4, 2, &[(&[(3, 3)], "3/128")]),
    (
        5,
        5,
        &[
            (&[(9, 1)], "7/262144"),
            (&[(3, 1), (7, 1)], "21/65536"),
            (&[(5, 2)], "45/262144"),
            (&[(3, 2), (5, 1)], "135/65536"),
            (&[(3, 4)], "297/131072"),
        ],
    ),
    (
        5,
        4,
        &[
            (&[(3, 1), (7, 1)], "-105/16384"),
            (&[(5, 2)], "-75/16384"),
            (&[(3, 2), (5, 1)], "-1215/16384"),
            (&[(3, 4)], "-1701/16384"),
        ],
    ),
    (
        5,
        3,
        &[
            (&[(5, 2)], "45/2048"),
            (&[(3, 2), (5, 1)], "135/512"),
            (&[(3, 4)], "1053/2048"),
        ],
    ),
    (5, 2, &[(&[(3, 4)], "-27/512")]),
    (
        6,
        6,
        &[
            (&[(11, 1)], "21/4194304"),
            (&[(3, 1), (9, 1)], "315/4194304"),
            (&[(5, 1), (7, 1)], "175/2097152"),
            (&[(3, 1), (5, 2)], "675/1048576"),
            (&[(3, 2), (7, 1)], "315/524288"),
            (&[(3, 3), (5, 1)], "1755/524288"),
            (&[(3, 5)], "7371/2621440"),
        ],
    ),
    (
        6,
        5,
        &[
            (&[(3, 1), (9, 1)], "-315/131072"),
            (&[(5, 1), (7, 1)], "-525/131072"),
            (&[(3, 1), (5, 2)], "-2925/65536"),
            (&[(3, 2), (7, 1)], "-4725/131072"),
            (&[(3, 3), (5, 1)], "-36045/131072"),
            (&[(3, 5)], "-88047/327680"),
        ],
    ),
    (
        6,
        4,
        &[
            (&[(5, 1), (7, 1)], "1575/32768"),
            (&[(3, 1), (5, 2)], "4725/8192"),
            (&[(3, 2), (7, 1)], "4725/16384"),
            (&[(3, 3), (5, 1)], "30375/8192"),
            (&[(3, 5)], "700569/163840"),
        ],
    ),
    (
        6,
        3,
        &[
            (&[(3, 1), (5, 2)], "-675/1024"),
            (&[(3, 3), (5, 1)], "-4725/1024"),
            (&[(3, 6)], "-18549/2560"),
        ],
    ),
    (6, 2, &[(&[(3, 5)], "81/640")]),
];

use crate::error::{Error, Result};
use crate::exactalg::{Scalar, TimeMonomial, TimesPoly};

fn table_monomial(pairs: &[(u32, u32)], nu: u32) -> Result<TimeMonomial> {
    TimeMonomial::from_pairs(pairs, nu)
}

fn table_coefficient<C: Scalar>(s: &str) -> Result<C> {
    C::parse_fraction(s).ok_or_else(|| Error::Parse(format!("bad coefficient {s}")))
}

/// A moment table as a polynomial, `T_k` stored as `t_k`.
pub fn moment_poly<C: Scalar>(table: MomentTable) -> Result<TimesPoly<C>> {
    let mut p = TimesPoly::zero();
    for (pairs, c) in table {
        p.add_term(table_monomial(pairs, 0)?, table_coefficient(c)?);
    }
    Ok(p)
}

/// A time-polynomial table as a polynomial.
pub fn times_poly<C: Scalar>(table: TimesTable) -> Result<TimesPoly<C>> {
    let mut p = TimesPoly::zero();
    for (pairs, nu, c) in table {
        p.add_term(table_monomial(pairs, *nu)?, table_coefficient(c)?);
    }
    Ok(p)
}
