// Generated by tools/gen_filter_tables.py. Do not edit.

#include "filter_tables.hpp"

namespace wavexfer::detail {

namespace {

// haar
constexpr double kHaarDecLo[] = {
    0.7071067811865476,
    0.7071067811865476,
};
constexpr double kHaarDecHi[] = {
    -0.7071067811865476,
    0.7071067811865476,
};

// db2
constexpr double kDb2DecLo[] = {
    -0.12940952255126037,
    0.2241438680420134,
    0.8365163037378079,
    0.48296291314453416,
};
constexpr double kDb2DecHi[] = {
    -0.48296291314453416,
    0.8365163037378079,
    -0.2241438680420134,
    -0.12940952255126037,
};

// db4
constexpr double kDb4DecLo[] = {
    -0.010597401785069032,
    0.0328830116668852,
    0.030841381835560764,
    -0.18703481171909309,
    -0.027983769416859854,
    0.6308807679298589,
    0.7148465705529157,
    0.2303778133088965,
};
constexpr double kDb4DecHi[] = {
    -0.2303778133088965,
    0.7148465705529157,
    -0.6308807679298589,
    -0.027983769416859854,
    0.18703481171909309,
    0.030841381835560764,
    -0.0328830116668852,
    -0.010597401785069032,
};

// sym8
constexpr double kSym8DecLo[] = {
    -0.0033824159510061256,
    -0.0005421323317911481,
    0.03169508781149298,
    0.007607487324917605,
    -0.1432942383508097,
    -0.061273359067658524,
    0.4813596512583722,
    0.7771857517005235,
    0.3644418948353314,
    -0.05194583810770904,
    -0.027219029917056003,
    0.049137179673607506,
    0.003808752013890615,
    -0.01495225833704823,
    -0.0003029205147213668,
    0.0018899503327594609,
};
constexpr double kSym8DecHi[] = {
    -0.0018899503327594609,
    -0.0003029205147213668,
    0.01495225833704823,
    0.003808752013890615,
    -0.049137179673607506,
    -0.027219029917056003,
    0.05194583810770904,
    0.3644418948353314,
    -0.7771857517005235,
    0.4813596512583722,
    0.061273359067658524,
    -0.1432942383508097,
    -0.007607487324917605,
    0.03169508781149298,
    0.0005421323317911481,
    -0.0033824159510061256,
};

// coif3
constexpr double kCoif3DecLo[] = {
    -3.459977319727278e-05,
    -7.0983302506379e-05,
    0.0004662169598204029,
    0.0011175187708306303,
    -0.0025745176881367972,
    -0.009007976136730624,
    0.015880544863669452,
    0.03455502757329774,
    -0.08230192710629983,
    -0.07179982161915484,
    0.42848347637737,
    0.7937772226260872,
    0.40517690240911824,
    -0.06112339000297255,
    -0.06577191128146936,
    0.023452696142077168,
    0.007782596425672746,
    -0.003793512864380802,
};
constexpr double kCoif3DecHi[] = {
    0.003793512864380802,
    0.007782596425672746,
    -0.023452696142077168,
    -0.06577191128146936,
    0.06112339000297255,
    0.40517690240911824,
    -0.7937772226260872,
    0.42848347637737,
    0.07179982161915484,
    -0.08230192710629983,
    -0.03455502757329774,
    0.015880544863669452,
    0.009007976136730624,
    -0.0025745176881367972,
    -0.0011175187708306303,
    0.0004662169598204029,
    7.0983302506379e-05,
    -3.459977319727278e-05,
};

// dmey
constexpr double kDmeyDecLo[] = {
    8.450413547527924e-07,
    7.938259828377277e-07,
    -6.837474048192775e-06,
    6.585546022962286e-06,
    7.1522317286940704e-06,
    2.3358730200979684e-05,
    3.633844481540759e-06,
    -1.4414203722067191e-05,
    -3.466661780847706e-05,
    7.754552836164654e-05,
    0.00012552929845629466,
    2.3350006605454812e-05,
    -0.00029454244669896646,
    -1.0351394716497319e-05,
    0.00038462347131664615,
    0.0004967242935396736,
    -0.0005486348918973808,
    -0.0028277299622016384,
    0.0020056295798222554,
    0.006189183443617511,
    -0.006236597358155864,
    -0.011047468030974922,
    0.01520635301647492,
    0.017496628890760993,
    -0.03203311550464652,
    -0.024328776671901073,
    0.06362724024234565,
    0.030668166239823588,
    -0.13269013935030669,
    -0.03505203395972653,
    0.44407047269581706,
    0.743788151533257,
    0.44407036382005144,
    -0.035054562448594895,
    -0.13269391373639125,
    0.030657514029421382,
    0.06361021308194519,
    -0.024358752473203155,
    -0.03207855329697436,
    0.01743325628963806,
    0.015122815992512275,
    -0.011145007807446173,
    -0.006348275785614476,
    0.006107232152324188,
    0.0019447500166141502,
    -0.002588419750298161,
    -1.296958351630983e-05,
    0.0006358349924120377,
    0.00011735711352615124,
    -0.00010190917140361028,
    -0.0001336475548508603,
    5.322093283216271e-05,
    -3.187347505348866e-05,
    -3.002564763779849e-05,
    -1.51958742655892e-05,
    1.561796215174004e-05,
    -2.4835986971798968e-05,
    -3.5610691625916896e-06,
    -5.8155968452505305e-06,
    -3.992005584721162e-06,
    -5.837258540334063e-07,
    6.213861692121688e-07,
};
constexpr double kDmeyDecHi[] = {
    -6.213861692121688e-07,
    -5.837258540334063e-07,
    3.992005584721162e-06,
    -5.8155968452505305e-06,
    3.5610691625916896e-06,
    -2.4835986971798968e-05,
    -1.561796215174004e-05,
    -1.51958742655892e-05,
    3.002564763779849e-05,
    -3.187347505348866e-05,
    -5.322093283216271e-05,
    -0.0001336475548508603,
    0.00010190917140361028,
    0.00011735711352615124,
    -0.0006358349924120377,
    -1.296958351630983e-05,
    0.002588419750298161,
    0.0019447500166141502,
    -0.006107232152324188,
    -0.006348275785614476,
    0.011145007807446173,
    0.015122815992512275,
    -0.01743325628963806,
    -0.03207855329697436,
    0.024358752473203155,
    0.06361021308194519,
    -0.030657514029421382,
    -0.13269391373639125,
    0.035054562448594895,
    0.44407036382005144,
    -0.743788151533257,
    0.44407047269581706,
    0.03505203395972653,
    -0.13269013935030669,
    -0.030668166239823588,
    0.06362724024234565,
    0.024328776671901073,
    -0.03203311550464652,
    -0.017496628890760993,
    0.01520635301647492,
    0.011047468030974922,
    -0.006236597358155864,
    -0.006189183443617511,
    0.0020056295798222554,
    0.0028277299622016384,
    -0.0005486348918973808,
    -0.0004967242935396736,
    0.00038462347131664615,
    1.0351394716497319e-05,
    -0.00029454244669896646,
    -2.3350006605454812e-05,
    0.00012552929845629466,
    -7.754552836164654e-05,
    -3.466661780847706e-05,
    1.4414203722067191e-05,
    3.633844481540759e-06,
    -2.3358730200979684e-05,
    7.1522317286940704e-06,
    -6.585546022962286e-06,
    -6.837474048192775e-06,
    -7.938259828377277e-07,
    8.450413547527924e-07,
};

// bior3.3
constexpr double kBior33DecLo[] = {
    0.06629126073623882,
    -0.1988737822087165,
    -0.15467960838455727,
    0.9943689110435825,
    0.9943689110435825,
    -0.15467960838455727,
    -0.1988737822087165,
    0.06629126073623882,
};
constexpr double kBior33DecHi[] = {
    -0.0,
    0.0,
    -0.1767766952966369,
    0.5303300858899106,
    -0.5303300858899106,
    0.1767766952966369,
    -0.0,
    0.0,
};
constexpr double kBior33RecLo[] = {
    0.0,
    0.0,
    0.1767766952966369,
    0.5303300858899106,
    0.5303300858899106,
    0.1767766952966369,
    0.0,
    0.0,
};
constexpr double kBior33RecHi[] = {
    0.06629126073623882,
    0.1988737822087165,
    -0.15467960838455727,
    -0.9943689110435825,
    0.9943689110435825,
    0.15467960838455727,
    -0.1988737822087165,
    -0.06629126073623882,
};

// bior4.4
constexpr double kBior44DecLo[] = {
    0.0,
    0.03782845550726404,
    -0.023849465019556843,
    -0.11062440441843718,
    0.37740285561283066,
    0.8526986790088938,
    0.37740285561283066,
    -0.11062440441843718,
    -0.023849465019556843,
    0.03782845550726404,
};
constexpr double kBior44DecHi[] = {
    -0.0,
    -0.06453888262869706,
    0.04068941760916406,
    0.41809227322161724,
    -0.7884856164055829,
    0.41809227322161724,
    0.04068941760916406,
    -0.06453888262869706,
    -0.0,
    0.0,
};
constexpr double kBior44RecLo[] = {
    0.0,
    -0.06453888262869706,
    -0.04068941760916406,
    0.41809227322161724,
    0.7884856164055829,
    0.41809227322161724,
    -0.04068941760916406,
    -0.06453888262869706,
    0.0,
    0.0,
};
constexpr double kBior44RecHi[] = {
    0.0,
    -0.03782845550726404,
    -0.023849465019556843,
    0.11062440441843718,
    0.37740285561283066,
    -0.8526986790088938,
    0.37740285561283066,
    0.11062440441843718,
    -0.023849465019556843,
    -0.03782845550726404,
};

// bior6.8
constexpr double kBior68DecLo[] = {
    0.0,
    0.0019088317364812906,
    -0.0019142861290887667,
    -0.016990639867602342,
    0.01193456527972926,
    0.04973290349094079,
    -0.07726317316720414,
    -0.09405920349573646,
    0.4207962846098268,
    0.8259229974584023,
    0.4207962846098268,
    -0.09405920349573646,
    -0.07726317316720414,
    0.04973290349094079,
    0.01193456527972926,
    -0.016990639867602342,
    -0.0019142861290887667,
    0.0019088317364812906,
};
constexpr double kBior68DecHi[] = {
    -0.0,
    0.0,
    -0.0,
    0.014426282505624435,
    -0.014467504896790148,
    -0.07872200106262882,
    0.04036797903033992,
    0.41784910915027457,
    -0.7589077294536541,
    0.41784910915027457,
    0.04036797903033992,
    -0.07872200106262882,
    -0.014467504896790148,
    0.014426282505624435,
    -0.0,
    0.0,
    -0.0,
    0.0,
};
constexpr double kBior68RecLo[] = {
    0.0,
    0.0,
    0.0,
    0.014426282505624435,
    0.014467504896790148,
    -0.07872200106262882,
    -0.04036797903033992,
    0.41784910915027457,
    0.7589077294536541,
    0.41784910915027457,
    -0.04036797903033992,
    -0.07872200106262882,
    0.014467504896790148,
    0.014426282505624435,
    0.0,
    0.0,
    0.0,
    0.0,
};
constexpr double kBior68RecHi[] = {
    0.0,
    -0.0019088317364812906,
    -0.0019142861290887667,
    0.016990639867602342,
    0.01193456527972926,
    -0.04973290349094079,
    -0.07726317316720414,
    0.09405920349573646,
    0.4207962846098268,
    -0.8259229974584023,
    0.4207962846098268,
    0.09405920349573646,
    -0.07726317316720414,
    -0.04973290349094079,
    0.01193456527972926,
    0.016990639867602342,
    -0.0019142861290887667,
    -0.0019088317364812906,
};

// rbio3.3
constexpr double kRbio33DecLo[] = {
    0.0,
    0.0,
    0.1767766952966369,
    0.5303300858899106,
    0.5303300858899106,
    0.1767766952966369,
    0.0,
    0.0,
};
constexpr double kRbio33DecHi[] = {
    -0.06629126073623882,
    -0.1988737822087165,
    0.15467960838455727,
    0.9943689110435825,
    -0.9943689110435825,
    -0.15467960838455727,
    0.1988737822087165,
    0.06629126073623882,
};
constexpr double kRbio33RecLo[] = {
    0.06629126073623882,
    -0.1988737822087165,
    -0.15467960838455727,
    0.9943689110435825,
    0.9943689110435825,
    -0.15467960838455727,
    -0.1988737822087165,
    0.06629126073623882,
};
constexpr double kRbio33RecHi[] = {
    0.0,
    -0.0,
    0.1767766952966369,
    -0.5303300858899106,
    0.5303300858899106,
    -0.1767766952966369,
    0.0,
    -0.0,
};

}  // namespace

const std::array<RawFilterTable, kFamilyCount>& raw_filter_tables() {
  static const std::array<RawFilterTable, kFamilyCount> tables{{
      {Family::haar, true, kHaarDecLo, kHaarDecHi, {}, {}},
      {Family::db2, true, kDb2DecLo, kDb2DecHi, {}, {}},
      {Family::db4, true, kDb4DecLo, kDb4DecHi, {}, {}},
      {Family::sym8, true, kSym8DecLo, kSym8DecHi, {}, {}},
      {Family::coif3, true, kCoif3DecLo, kCoif3DecHi, {}, {}},
      {Family::dmey, true, kDmeyDecLo, kDmeyDecHi, {}, {}},
      {Family::bior3_3, false, kBior33DecLo, kBior33DecHi, kBior33RecLo, kBior33RecHi},
      {Family::bior4_4, false, kBior44DecLo, kBior44DecHi, kBior44RecLo, kBior44RecHi},
      {Family::bior6_8, false, kBior68DecLo, kBior68DecHi, kBior68RecLo, kBior68RecHi},
      {Family::rbio3_3, false, kRbio33DecLo, kRbio33DecHi, kRbio33RecLo, kRbio33RecHi},
  }};
  return tables;
}

}  // namespace wavexfer::detail
