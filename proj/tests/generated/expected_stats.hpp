// Generated fixture data -- do not edit by hand.

#pragma once

namespace gambitlab::testing {

struct ExpectedRow {
  const char* san;
  int games;
  double p_raw;
  double p_renorm;
  double q_pawns;     // 0 when mate_in != 0
  int mate_in;        // >0 gambiteer mates, <0 gambiteer is mated
  double win_prob;
};
struct ExpectedMoments { double q_star; double sigma; double kappa; };
struct ExpectedQPoint { int ply; const char* san; double q_pawns; double win_prob; };
struct ExpectedGambit {
  const char* name;
  const char* slug;
  const char* final_fen;
  const char* final_key_hex;
  const char* pre_fen;
  int total_games;
  int plies;
  int gambit_ply;
  bool white_gambiteer;
  double current_q;
  double pre_q;
  double t_stat;
  bool is_gambit_relaxed;
  bool is_gambit_strict;
  ExpectedRow rows[5];
  ExpectedMoments renorm;       // win-probability scale
  ExpectedMoments raw;          // win-probability scale, raw weights
  double wwp_renorm;
  double wwp_raw;
  ExpectedMoments pawn_renorm;  // pawn scale, mate rows excluded
  const ExpectedQPoint* qseries;
  int qseries_len;
};

inline constexpr ExpectedQPoint kQseriesStaffordV1[] = {
    {0, "-", -0.20000000000000001, 0.4712494361077314},
    {1, "e4", -0.29999999999999999, 0.4569335079777882},
    {2, "e5", -0.40000000000000002, 0.44268836623770724},
    {3, "Nf3", -0.46000000000000002, 0.43418479693076684},
    {4, "Nf6", -0.51000000000000001, 0.42712774860549563},
    {5, "Nxe5", -0.56999999999999995, 0.41869852163108506},
    {6, "Nc6", -0.96999999999999997, 0.36392310031211805},
    {7, "Nxc6", -1.3700000000000001, 0.31246175178765823},
    {8, "dxc6", -1.76, 0.26636629758619262},
    {9, "d3", -2.1600000000000001, 0.22384542465816928},
    {10, "Bc5", -2.5600000000000001, 0.18638778949441326},
};
inline constexpr ExpectedQPoint kQseriesStaffordV2[] = {
    {0, "-", -0.20000000000000001, 0.4712494361077314},
    {1, "e4", -0.29999999999999999, 0.4569335079777882},
    {2, "e5", -0.40000000000000002, 0.44268836623770724},
    {3, "Nf3", -0.46000000000000002, 0.43418479693076684},
    {4, "Nf6", -0.51000000000000001, 0.42712774860549563},
    {5, "Nxe5", -0.56999999999999995, 0.41869852163108506},
    {6, "Nc6", -0.96999999999999997, 0.36392310031211805},
    {7, "Nxc6", -1.3700000000000001, 0.31246175178765823},
    {8, "dxc6", -1.76, 0.26636629758619262},
    {9, "Nc3", -2.1299999999999999, 0.2268600869232327},
    {10, "Bc5", -2.52, 0.1899048413952433},
};
inline constexpr ExpectedQPoint kQseriesReverseStafford[] = {
    {0, "-", 0.20000000000000001, 0.5287505638922686},
    {1, "e4", 0.29999999999999999, 0.54306649202221191},
    {2, "e5", 0.40000000000000002, 0.55731163376229276},
    {3, "Bc4", 0.51000000000000001, 0.57287225139450448},
    {4, "Nf6", 0.62, 0.58828997186316279},
    {5, "Nf3", 0.32000000000000001, 0.54592192278048368},
    {6, "Nxe4", 0.02, 0.50287819957481095},
    {7, "Nc3", -0.27000000000000002, 0.46122190794282847},
    {8, "Nxc3", -0.56999999999999995, 0.41869852163108506},
    {9, "dxc3", -0.87, 0.37734980421273789},
};
inline constexpr ExpectedQPoint kQseriesSmithMorraV1[] = {
    {0, "-", 0.20000000000000001, 0.5287505638922686},
    {1, "e4", 0.29999999999999999, 0.54306649202221191},
    {2, "c5", 0.34000000000000002, 0.54877433585974189},
    {3, "d4", 0.12, 0.51726252443237619},
    {4, "cxd4", -0.10000000000000001, 0.48561281583400134},
    {5, "c3", -0.32000000000000001, 0.45407807721951632},
};
inline constexpr ExpectedQPoint kQseriesSmithMorraV2[] = {
    {0, "-", 0.20000000000000001, 0.5287505638922686},
    {1, "e4", 0.29999999999999999, 0.54306649202221191},
    {2, "c5", 0.34000000000000002, 0.54877433585974189},
    {3, "d4", 0.12, 0.51726252443237619},
    {4, "cxd4", -0.10000000000000001, 0.48561281583400134},
    {5, "c3", -0.32000000000000001, 0.45407807721951632},
    {6, "dxc3", -0.17000000000000001, 0.47555453887933863},
    {7, "Nxc3", -0.16, 0.47699041270243769},
    {8, "Nc6", -0.14999999999999999, 0.47842666694885455},
    {9, "Nf3", -0.14000000000000001, 0.47986327796418354},
    {10, "d6", -0.12, 0.48273747556762381},
    {11, "Bc4", -0.11, 0.48417501473526492},
    {12, "e6", -0.10000000000000001, 0.48561281583400134},
    {13, "O-O", -0.089999999999999997, 0.48705085510713625},
    {14, "Nf6", -0.080000000000000002, 0.4884891087822083},
    {15, "Qe2", -0.070000000000000007, 0.48992755307256153},
    {16, "Be7", -0.059999999999999998, 0.49136616417891738},
    {17, "Rd1", -0.050000000000000003, 0.49280491829094863},
    {18, "Bd7", -0.029999999999999999, 0.49568276024494023},
    {19, "Nb5", -0.02, 0.49712180042518911},
    {20, "Qb8", -0.01, 0.4985608882908471},
    {21, "Bf4", 0.0, 0.5},
};
inline constexpr ExpectedQPoint kQseriesHalloweenV1[] = {
    {0, "-", 0.20000000000000001, 0.5287505638922686},
    {1, "e4", 0.29999999999999999, 0.54306649202221191},
    {2, "e5", 0.40000000000000002, 0.55731163376229276},
    {3, "Nf3", 0.46000000000000002, 0.56581520306923327},
    {4, "Nc6", 0.28999999999999998, 0.54163770271476341},
    {5, "Nc3", 0.23000000000000001, 0.53305139388444112},
    {6, "Nf6", 0.17000000000000001, 0.52444546112066148},
    {7, "Nxe5", 0.11, 0.51582498526473497},
    {8, "Nxe5", 0.050000000000000003, 0.50719508170905137},
    {9, "d4", -0.01, 0.4985608882908471},
    {10, "Ng6", -0.070000000000000007, 0.48992755307256153},
    {11, "e5", -0.13, 0.48130022207044143},
    {12, "Ng8", -0.19, 0.47268402699350709},
    {13, "h4", -0.25, 0.46408407305489768},
    {14, "Bb4", -0.31, 0.45550542691699208},
    {15, "h5", -0.38, 0.44553062597832394},
    {16, "N6e7", -0.44, 0.43701527189640416},
    {17, "Qg4", -0.5, 0.4285368825916186},
    {18, "g6", -0.56000000000000005, 0.42010023964211857},
    {19, "hxg6", -0.62, 0.41171002813683716},
    {20, "Nxg6", -0.68000000000000005, 0.40337082669422603},
    {21, "Qg3", -0.73999999999999999, 0.39508709799204322},
    {22, "N8e7", -0.80000000000000004, 0.38686317984685692},
    {23, "Bg5", -0.85999999999999999, 0.3787032768775454},
};
inline constexpr ExpectedQPoint kQseriesHalloweenV2[] = {
    {0, "-", 0.20000000000000001, 0.5287505638922686},
    {1, "e4", 0.29999999999999999, 0.54306649202221191},
    {2, "e5", 0.40000000000000002, 0.55731163376229276},
    {3, "Nf3", 0.46000000000000002, 0.56581520306923327},
    {4, "Nc6", 0.28999999999999998, 0.54163770271476341},
    {5, "Nc3", 0.23000000000000001, 0.53305139388444112},
    {6, "Nf6", 0.17000000000000001, 0.52444546112066148},
    {7, "Nxe5", 0.11, 0.51582498526473497},
    {8, "Nxe5", 0.050000000000000003, 0.50719508170905137},
    {9, "d4", -0.01, 0.4985608882908471},
    {10, "Ng6", -0.070000000000000007, 0.48992755307256153},
    {11, "e5", -0.13, 0.48130022207044143},
    {12, "Ng8", -0.19, 0.47268402699350709},
    {13, "Bc4", -0.33000000000000002, 0.45265148195413535},
    {14, "Bb4", -0.40000000000000002, 0.44268836623770724},
    {15, "Qf3", -0.46999999999999997, 0.43277115565704782},
    {16, "f6", -0.54000000000000004, 0.42290752417467098},
    {17, "O-O", -0.60999999999999999, 0.41310497662089996},
    {18, "d5", -0.68999999999999995, 0.40198623423065638},
    {19, "exd6", -0.76000000000000001, 0.39233893587318014},
    {20, "Bxd6", -0.82999999999999996, 0.38277496909505365},
    {21, "Ne4", -0.90000000000000002, 0.37330091833326801},
};
inline constexpr ExpectedQPoint kQseriesDanishV1[] = {
    {0, "-", 0.20000000000000001, 0.5287505638922686},
    {1, "e4", 0.29999999999999999, 0.54306649202221191},
    {2, "e5", 0.40000000000000002, 0.55731163376229276},
    {3, "d4", 0.25, 0.53591592694510226},
    {4, "exd4", 0.10000000000000001, 0.51438718416599871},
    {5, "c3", -0.050000000000000003, 0.49280491829094863},
    {6, "dxc3", -0.20000000000000001, 0.4712494361077314},
    {7, "Nxc3", -0.34999999999999998, 0.44980064674646297},
};
inline constexpr ExpectedQPoint kQseriesDanishV2[] = {
    {0, "-", 0.20000000000000001, 0.5287505638922686},
    {1, "e4", 0.29999999999999999, 0.54306649202221191},
    {2, "e5", 0.40000000000000002, 0.55731163376229276},
    {3, "d4", 0.25, 0.53591592694510226},
    {4, "exd4", 0.10000000000000001, 0.51438718416599871},
    {5, "c3", -0.050000000000000003, 0.49280491829094863},
    {6, "dxc3", -0.20000000000000001, 0.4712494361077314},
    {7, "Nxc3", -0.34999999999999998, 0.44980064674646297},
    {8, "Nc6", -0.17000000000000001, 0.47555453887933863},
    {9, "Bc4", -0.14000000000000001, 0.47986327796418354},
    {10, "Nf6", -0.10000000000000001, 0.48561281583400134},
    {11, "Nf3", -0.070000000000000007, 0.48992755307256153},
    {12, "d6", -0.029999999999999999, 0.49568276024494023},
    {13, "Qb3", 0.0, 0.5},
};
inline constexpr ExpectedQPoint kQseriesQueensGambit[] = {
    {0, "-", 0.20000000000000001, 0.5287505638922686},
    {1, "d4", 0.27000000000000002, 0.53877809205717153},
    {2, "d5", 0.33000000000000002, 0.54734851804586471},
    {3, "c4", 0.39000000000000001, 0.5558909611168531},
};

inline constexpr ExpectedGambit kExpectedGambits[] = {
    {"Stafford v1", "stafford_v1",
     "r1bqk2r/ppp2ppp/2p2n2/2b5/4P3/3P4/PPP2PPP/RNBQKB1R w KQkq - 1 6",
     "e41aa183514e0c37",
     "rnbqkb1r/pppp1ppp/5n2/4N3/4P3/8/PPPP1PPP/RNBQKB1R b KQkq - 0 3",
     100, 10, 6, false,
     -2.5600000000000001, -0.56999999999999995, 1.9900000000000002, true, false,
     {
         {"Be2", 59, 0.58999999999999997, 0.69411764705882351, -2.5600000000000001, 0, 0.18638778949441326},
         {"Be3", 14, 0.14000000000000001, 0.16470588235294117, -0.87, 0, 0.37734980421273789},
         {"Bg5", 4, 0.040000000000000001, 0.047058823529411764, 6.2000000000000002, 0, 0.97258872537269336},
         {"Nc3", 4, 0.040000000000000001, 0.047058823529411764, 1.48, 0, 0.70097739861010799},
         {"f3", 4, 0.040000000000000001, 0.047058823529411764, -1.74, 0, 0.2686221421606117},
     },
     {0.28292388122026307, 0.19635217142572953, 2.4291379997161289},
     {0.24048529903722365, 0.18520779467697851, 3.1273384527325949},
     0.28292388122026307, 0.24048529903722365,
     {-1.6407058823529412, 2.0090330060447394, 2.9165068341451539},
     kQseriesStaffordV1, 11},
    {"Stafford v2", "stafford_v2",
     "r1bqk2r/ppp2ppp/2p2n2/2b5/4P3/2N5/PPPP1PPP/R1BQKB1R w KQkq - 2 6",
     "dff2b280253bf5e7",
     "rnbqkb1r/pppp1ppp/5n2/4N3/4P3/8/PPPP1PPP/RNBQKB1R b KQkq - 0 3",
     100, 10, 6, false,
     -2.52, -0.56999999999999995, 1.9500000000000002, true, false,
     {
         {"Be2", 60, 0.59999999999999998, 0.59999999999999998, -0.14000000000000001, 0, 0.47986327796418354},
         {"h3", 20, 0.20000000000000001, 0.20000000000000001, -2.5600000000000001, 0, 0.18638778949441326},
         {"Qe2", 7, 0.070000000000000007, 0.070000000000000007, -1.6200000000000001, 0, 0.28240827680846853},
         {"d3", 7, 0.070000000000000007, 0.070000000000000007, 1.48, 0, 0.70097739861010799},
         {"Bc4", 6, 0.059999999999999998, 0.059999999999999998, 1.4299999999999999, 0, 0.69490971272950253},
     },
     {0.43572710472046328, 0.15557591089998643, -0.25228019738051438},
     {0.43572710472046328, 0.15557591089998643, -0.25228019738051438},
     0.43572710472046328, 0.43572710472046328,
     {-0.52000000000000002, 1.2295568307321139, -0.40524224224757743},
     kQseriesStaffordV2, 11},
    {"Reverse Stafford", "reverse_stafford",
     "rnbqkb1r/pppp1ppp/8/4p3/2B5/2P2N2/PPP2PPP/R1BQK2R b KQkq - 0 5",
     "48a4f4b096735506",
     "rnbqkb1r/pppp1ppp/5n2/4p3/2B1P3/8/PPPP1PPP/RNBQK1NR w KQkq - 2 3",
     100, 9, 5, true,
     -0.87, 0.62, 1.49, true, false,
     {
         {"f6", 60, 0.59999999999999998, 0.69767441860465118, -0.73999999999999999, 0, 0.39508709799204322},
         {"c6", 14, 0.14000000000000001, 0.16279069767441862, 0.0, 0, 0.5},
         {"Bc5", 4, 0.040000000000000001, 0.046511627906976744, 2.3599999999999999, 0, 0.79551990031274211},
         {"Nc6", 4, 0.040000000000000001, 0.046511627906976744, 3.3399999999999999, 0, 0.87243460363575975},
         {"d6", 4, 0.040000000000000001, 0.046511627906976744, 3.6299999999999999, 0, 0.88988784218113282},
     },
     {0.47600692167489689, 0.15712178245230052, 1.8935607689889142},
     {0.40936595264041131, 0.15827291308485245, 2.7279508877693983},
     0.47600692167489689, 0.40936595264041131,
     {-0.082325581395348874, 1.3289335420227131, 2.0124318354174422},
     kQseriesReverseStafford, 10},
    {"Smith-Morra v1", "smith_morra_v1",
     "rnbqkbnr/pp1ppppp/8/8/3pP3/2P5/PP3PPP/RNBQKBNR b KQkq - 0 3",
     "97bbbb3bbaa7f2fd",
     "rnbqkbnr/pp1ppppp/8/2p5/4P3/8/PPPP1PPP/RNBQKBNR w KQkq c6 0 2",
     200, 5, 3, true,
     -0.32000000000000001, 0.34000000000000002, 0.66000000000000003, true, false,
     {
         {"dxc3", 64, 0.32000000000000001, 0.3595505617977528, -0.17000000000000001, 0, 0.47555453887933863},
         {"g6", 48, 0.23999999999999999, 0.2696629213483146, 0.90000000000000002, 0, 0.62669908166673205},
         {"Nf6", 36, 0.17999999999999999, 0.20224719101123595, 0.0, 0, 0.5},
         {"d3", 22, 0.11, 0.12359550561797752, 0.93000000000000005, 0, 0.63073028861620217},
         {"d5", 8, 0.040000000000000001, 0.0449438202247191, 0.35999999999999999, 0, 0.55162354731096053},
     },
     {0.54385450076587061, 0.069660047203663561, 0.30403312811638444},
     {0.4840305056816247, 0.086625486908809252, 1.6262395561690393},
     0.54385450076587061, 0.4840305056816247,
     {0.31269662921348312, 0.49372185237917887, 0.30813730434568803},
     kQseriesSmithMorraV1, 6},
    {"Smith-Morra v2", "smith_morra_v2",
     "rq2k2r/pp1bbppp/2nppn2/1N6/2B1PB2/5N2/PP2QPPP/R2R2K1 b kq - 9 11",
     "4ec6df36e1941df0",
     "rnbqkbnr/pp1ppppp/8/2p5/4P3/8/PPPP1PPP/RNBQKBNR w KQkq c6 0 2",
     50, 21, 3, true,
     0.0, 0.34000000000000002, 0.34000000000000002, true, true,
     {
         {"e5", 25, 0.5, 0.51020408163265307, 1.0, 0, 0.64006499980288512},
         {"Kf8", 6, 0.12, 0.12244897959183673, 4.6399999999999997, 0, 0.93529349904607828},
         {"Ne5", 6, 0.12, 0.12244897959183673, 0.0, 0, 0.5},
         {"O-O", 6, 0.12, 0.12244897959183673, 1.7, 0, 0.72683007227673102},
         {"Qd8", 6, 0.12, 0.12244897959183673, 5.3700000000000001, 0, 0.95652914258860611},
     },
     {0.70843961792940047, 0.14691768364691582, 0.63951722039663872},
     {0.69427082557081232, 0.14611587605792364, 0.92622257276749231},
     0.70843961792940047, 0.69427082557081232,
     {1.9440816326530612, 1.8033177115656336, 1.0217905705336219},
     kQseriesSmithMorraV2, 22},
    {"Halloween v1", "halloween_v1",
     "r1bqk2r/ppppnp1p/6n1/4P1B1/1b1P4/2N3Q1/PPP2PP1/R3KB1R b KQkq - 3 12",
     "4d9a1ad7d636e70a",
     "r1bqkb1r/pppp1ppp/2n2n2/4p3/4P3/2N2N2/PPPP1PPP/R1BQKB1R w KQkq - 4 4",
     100, 23, 7, true,
     -0.85999999999999999, 0.17000000000000001, 1.03, true, false,
     {
         {"Nf5", 38, 0.38, 0.38, -2.4300000000000002, 0, 0.19800335588556686},
         {"O-O", 20, 0.20000000000000001, 0.20000000000000001, 0.0, 5, 1.0},
         {"d5", 16, 0.16, 0.16, -1.45, 0, 0.30265492141014677},
         {"d6", 14, 0.14000000000000001, 0.14000000000000001, -0.40999999999999998, 0, 0.44126863067523897},
         {"Bxc3+", 12, 0.12, 0.12, -0.81000000000000005, 0, 0.38549863899144221},
     },
     {0.43170350763564547, 0.29711905260998595, 1.2009995599048322},
     {0.43170350763564547, 0.29711905260998595, 1.2009995599048322},
     0.43170350763564547, 0.43170350763564547,
     {-1.6375, 0.81960585039395617, 0.31523482911192269},
     kQseriesHalloweenV1, 24},
    {"Halloween v2", "halloween_v2",
     "r1bqk1nr/ppp3pp/3b1pn1/8/2BPN3/5Q2/PPP2PPP/R1B2RK1 b kq - 1 11",
     "c818f9d91b843e43",
     "r1bqkb1r/pppp1ppp/2n2n2/4p3/4P3/2N2N2/PPPP1PPP/R1BQKB1R w KQkq - 4 4",
     100, 21, 7, true,
     -0.90000000000000002, 0.17000000000000001, 1.0700000000000001, true, false,
     {
         {"Qe7", 35, 0.34999999999999998, 0.36082474226804123, 1.1000000000000001, 0, 0.6532171672188698},
         {"Be7", 25, 0.25, 0.25773195876288657, -1.1699999999999999, 0, 0.33771220256911116},
         {"N8e7", 25, 0.25, 0.25773195876288657, 1.55, 0, 0.70935463059876336},
         {"Bd7", 6, 0.059999999999999998, 0.061855670103092786, 1.1200000000000001, 0, 0.65582050591239505},
         {"Kf8", 6, 0.059999999999999998, 0.061855670103092786, -0.69999999999999996, 0, 0.40060320329074317},
     },
     {0.57090529832037251, 0.15375354646234868, -0.72926326604226976},
     {0.55377813937076126, 0.1523662949760603, -0.3924155046088828},
     0.57090529832037251, 0.55377813937076126,
     {0.52082474226804132, 1.1159080903873508, -0.71534405267855694},
     kQseriesHalloweenV2, 22},
    {"Danish v1", "danish_v1",
     "rnbqkbnr/pppp1ppp/8/8/4P3/2N5/PP3PPP/R1BQKBNR b KQkq - 0 4",
     "94611889fa573fd2",
     "rnbqkbnr/pppp1ppp/8/4p3/4P3/8/PPPP1PPP/RNBQKBNR w KQkq e6 0 2",
     200, 7, 3, true,
     -0.34999999999999998, 0.40000000000000002, 0.75, true, false,
     {
         {"Nc6", 106, 0.53000000000000003, 0.53535353535353536, -0.17000000000000001, 0, 0.47555453887933863},
         {"Bb4", 40, 0.20000000000000001, 0.20202020202020202, -0.20000000000000001, 0, 0.4712494361077314},
         {"d6", 40, 0.20000000000000001, 0.20202020202020202, 0.0, 0, 0.5},
         {"Bc5", 6, 0.029999999999999999, 0.030303030303030304, -0.40000000000000002, 0, 0.44268836623770724},
         {"Nf6", 6, 0.029999999999999999, 0.030303030303030304, 1.3500000000000001, 0, 0.68505960899335028},
     },
     {0.48497599200457325, 0.037396639316972347, 4.5918544507849388},
     {0.48012623208452748, 0.037520774451641398, 4.8844554286587645},
     0.48497599200457325, 0.48012623208452748,
     {-0.10262626262626262, 0.27036296537737597, 4.6530931747582365},
     kQseriesDanishV1, 8},
    {"Danish v2", "danish_v2",
     "r1bqkb1r/ppp2ppp/2np1n2/8/2B1P3/1QN2N2/PP3PPP/R1B1K2R b KQkq - 1 7",
     "ed86d470cf687461",
     "rnbqkbnr/pppp1ppp/8/4p3/4P3/8/PPPP1PPP/RNBQKBNR w KQkq e6 0 2",
     100, 13, 3, true,
     0.0, 0.40000000000000002, 0.40000000000000002, true, true,
     {
         {"Qd7", 92, 0.92000000000000004, 0.92929292929292928, -0.22, 0, 0.46838170217189273},
         {"Qe7", 4, 0.040000000000000001, 0.040404040404040407, 1.0, 0, 0.64006499980288512},
         {"Be6", 1, 0.01, 0.010101010101010102, 1.97, 0, 0.75658059429505264},
         {"Be7", 1, 0.01, 0.010101010101010102, 2.54, 0, 0.81185999833378653},
         {"d5", 1, 0.01, 0.010101010101010102, 3.3599999999999999, 0, 0.87371042094508133},
     },
     {0.48579320820807675, 0.067660399519974782, 4.1447510728316725},
     {0.48093527612599596, 0.067494547006728967, 4.3488140301471159},
     0.48579320820807675, 0.48093527612599596,
     {-0.084545454545454563, 0.54464569657950224, 4.5323818290170834},
     kQseriesDanishV2, 14},
    {"Queen's Gambit", "queens_gambit",
     "rnbqkbnr/ppp1pppp/8/3p4/2PP4/8/PP2PPPP/RNBQKBNR b KQkq c3 0 2",
     "c8bd7c2e9e72e2f0",
     "rnbqkbnr/ppp1pppp/8/3p4/3P4/8/PPP1PPPP/RNBQKBNR w KQkq d6 0 2",
     100, 3, 3, true,
     0.39000000000000001, 0.33000000000000002, -0.059999999999999998, false, false,
     {
         {"e6", 55, 0.55000000000000004, 0.5670103092783505, 0.29999999999999999, 0, 0.54306649202221191},
         {"dxc4", 20, 0.20000000000000001, 0.20618556701030927, 0.40000000000000002, 0, 0.55731163376229276},
         {"c6", 12, 0.12, 0.12371134020618557, 0.29999999999999999, 0, 0.54306649202221191},
         {"Nf6", 6, 0.059999999999999998, 0.061855670103092786, 0.34999999999999998, 0, 0.55019935325353697},
         {"e5", 4, 0.040000000000000001, 0.041237113402061855, 0.90000000000000002, 0, 0.62669908166673205},
     },
     {0.54989360914352781, 0.016935372451933793, 3.8187074244668815},
     {0.53339680086922203, 0.023284822903023677, 2.8606694830077499},
     0.54989360914352781, 0.53339680086922203,
     {0.34845360824742261, 0.12130170451361508, 3.8482442528376981},
     kQseriesQueensGambit, 4},
};

struct ExpectedAggregate {
  int n;
  double mean_current_q;
  double mean_pre_q;
  double mean_cont_q;   // pawn scale, mate rows excluded
  double mean_kappa;
  double mean_sigma;
  double mean_player_prob;
  double mean_win_prob;
  double mean_wwp;
  double prod_player_win;
};

inline constexpr ExpectedAggregate kAggregateRenorm = {
    9, -0.93111111111111122, 0.14444444444444449, 0.64833333333333343, 1.5802567485907475, 0.14239524817087529, 0.19999999999999998, 0.57902244115745682, 0.49114778138661802, 0.11580448823149135};
inline constexpr ExpectedAggregate kAggregateRaw = {
    9, -0.93111111111111122, 0.14444444444444449, 0.64833333333333343, 2.0219249762399825, 0.14292207229699633, 0.18955555555555553, 0.57902244115745682, 0.4678247603186072, 0.1097569205127357};

inline constexpr const char* kMockEngineIdentity = "mock-oracle 1.0";
inline constexpr int kConfigDepth = 12;

}  // namespace gambitlab::testing
