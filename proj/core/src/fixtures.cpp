#include "geovqe/fixtures.hpp"

namespace geovqe {

namespace {

constexpr std::string_view k_h2_sto3g_0p74 = R"raw(# H2, STO-3G, R = 0.74 A
# generated by scripts/make_fixtures.py (STO-3G integrals, RHF, Jordan-Wigner)
n_qubits 4
n_electrons 2
label h2_sto3g_0p74
nuclear_repulsion 0.7151043905325648
e_hf -1.116759310181402
e_fci -1.137283834946747
term -0.8121705901778792 IIII
term 0.17141283463419746 ZIII
term 0.17141283463419757 IZII
term 0.16868898424372852 ZZII
term -0.2234315614984596 IIZI
term 0.12062523789253138 ZIZI
term 0.1659278526517626 IZZI
term -0.2234315614984596 IIIZ
term 0.1659278526517626 ZIIZ
term 0.12062523789253138 IZIZ
term 0.1744128785740866 IIZZ
term -0.045302614759231224 YYXX
term 0.045302614759231224 XYYX
term 0.045302614759231224 YXXY
term -0.045302614759231224 XXYY
)raw";

constexpr std::string_view k_h4_chain_0p90 = R"raw(# H4 linear chain, STO-3G, R = 0.90 A spacing
# generated by scripts/make_fixtures.py (STO-3G integrals, RHF, Jordan-Wigner)
n_qubits 8
n_electrons 4
label h4_chain_0p90
nuclear_repulsion 2.5478904581197304
e_hf -2.124259747995996
e_fci -2.1803166163768193
term -2.606722861254052 IIIIIIII
term 0.19907438690484386 ZIIIIIII
term 0.19907438690484386 IZIIIIII
term 0.13059826907869238 ZZIIIIII
term 0.08947511437676342 IIZIIIII
term 0.07516356289535425 ZIZIIIII
term 0.11438669784170973 IZZIIIII
term 0.08947511437676359 IIIZIIII
term 0.11438669784170973 ZIIZIIII
term 0.07516356289535425 IZIZIIII
term 0.11884247932041353 IIZZIIII
term -0.10698068800365222 IIIIZIII
term 0.09072593620781141 ZIIIZIII
term 0.1175566769716456 IZIIZIII
term 0.08282237677318753 IIZIZIII
term 0.11718888774146788 IIIZZIII
term -0.10698068800365221 IIIIIZII
term 0.1175566769716456 ZIIIIZII
term 0.09072593620781141 IZIIIZII
term 0.11718888774146788 IIZIIZII
term 0.08282237677318753 IIIZIZII
term 0.12277082255402998 IIIIZZII
term -0.4252800621441677 IIIIIIZI
term 0.11417254495368707 ZIIIIIZI
term 0.13797714615147846 IZIIIIZI
term 0.09666904175639154 IIZIIIZI
term 0.1223754396916526 IIIZIIZI
term 0.08717998368828578 IIIIZIZI
term 0.12729590574617622 IIIIIZZI
term -0.4252800621441677 IIIIIIIZ
term 0.13797714615147846 ZIIIIIIZ
term 0.11417254495368707 IZIIIIIZ
term 0.1223754396916526 IIZIIIIZ
term 0.09666904175639154 IIIZIIIZ
term 0.12729590574617622 IIIIZIIZ
term 0.08717998368828578 IIIIIZIZ
term 0.15490538719563945 IIIIIIZZ
term -0.03922313494635547 YYXXIIII
term 0.03922313494635547 XYYXIIII
term 0.03922313494635547 YXXYIIII
term -0.03922313494635547 XXYYIIII
term 0.0018493724634026146 XZZIXIII
term -0.023419538337055783 XZIZXIII
term -0.021428970251579763 XIZZXIII
term -0.004759894421763864 XZZZXIII
term 0.0018493724634026146 YZZIYIII
term -0.023419538337055783 YZIZYIII
term -0.021428970251579763 YIZZYIII
term -0.004759894421763864 YZZZYIII
term -0.003301292040211519 XZZZXZII
term -0.003301292040211519 YZZZYZII
term -0.012140708872144149 XZZZXIZI
term -0.012140708872144149 YZZZYIZI
term -0.022797240535803145 XZZZXIIZ
term -0.022797240535803145 YZZZYIIZ
term 0.0252689108004584 IYYXXIII
term -0.0252689108004584 IXYYXIII
term -0.0252689108004584 IYXXYIII
term 0.0252689108004584 IXXYYIII
term -0.003301292040211519 IXZZIXII
term -0.023419538337055783 IXZIZXII
term 0.0018493724634026146 IXIZZXII
term -0.004759894421763859 IXZZZXII
term -0.021428970251579763 ZXZZZXII
term -0.003301292040211519 IYZZIYII
term -0.023419538337055783 IYZIZYII
term 0.0018493724634026146 IYIZZYII
term -0.004759894421763859 IYZZZYII
term -0.021428970251579763 ZYZZZYII
term -0.022797240535803145 IXZZZXZI
term -0.022797240535803145 IYZZZYZI
term -0.012140708872144149 IXZZZXIZ
term -0.012140708872144149 IYZZZYIZ
term -0.0252689108004584 XZXXZXII
term -0.0252689108004584 YZYXZXII
term -0.0252689108004584 XZXYZYII
term -0.0252689108004584 YZYYZYII
term -0.026830740763834165 YYIIXXII
term 0.026830740763834165 XYIIYXII
term 0.026830740763834165 YXIIXYII
term -0.026830740763834165 XXIIYYII
term -0.034366510968280355 IIYYXXII
term 0.034366510968280355 IIXYYXII
term 0.034366510968280355 IIYXXYII
term -0.034366510968280355 IIXXYYII
term -0.002170199689921142 IIXZZIXI
term -0.027493520452076706 IIXZIZXI
term -0.00218359119769694 IIXIZZXI
term 0.01936074613304014 IIXZZZXI
term -0.010927235699192312 ZIXZZZXI
term -0.02217586486369498 IZXZZZXI
term -0.002170199689921142 IIYZZIYI
term -0.027493520452076706 IIYZIZYI
term -0.00218359119769694 IIYIZZYI
term 0.01936074613304014 IIYZZZYI
term -0.010927235699192312 ZIYZZZYI
term -0.02217586486369498 IZYZZZYI
term -0.024983718036386805 IIXZZZXZ
term -0.024983718036386805 IIYZZZYZ
term -0.011248629164502665 XXIXZZXI
term -0.011248629164502665 XYIYZZXI
term -0.011248629164502665 YXIXZZYI
term -0.011248629164502665 YYIYZZYI
term 0.02525675636671898 XZXIXZXI
term 0.01305032473645396 YZYIXZXI
term 0.012206431630265021 XZYIYZXI
term 0.012206431630265021 YZXIXZYI
term 0.01305032473645396 XZXIYZYI
term 0.02525675636671898 YZYIYZYI
term 0.03706090005068947 IXZXXZXI
term 0.03706090005068947 IYZYXZXI
term 0.03706090005068947 IXZXYZYI
term 0.03706090005068947 IYZYYZYI
term -0.024010575314235505 IYYIIXXI
term 0.024010575314235505 IXYIIYXI
term 0.024010575314235505 IYXIIXYI
term -0.024010575314235505 IXXIIYYI
term -0.011804143683970486 XZZXIXXI
term -0.011804143683970486 XZZYIYXI
term -0.011804143683970486 YZZXIXYI
term -0.011804143683970486 YZZYIYYI
term 0.025323320762155564 IIIYYXXI
term -0.025323320762155564 IIIXYYXI
term -0.025323320762155564 IIIYXXYI
term 0.025323320762155564 IIIXXYYI
term -0.011248629164502665 YYXZZZZX
term 0.011248629164502665 XYYZZZZX
term 0.011248629164502665 YXXZZZZY
term -0.011248629164502665 XXYZZZZY
term -0.024983718036386802 IIIXZZIX
term -0.027493520452076706 IIIXZIZX
term -0.002170199689921142 IIIXIZZX
term 0.019360746133040146 IIIXZZZX
term -0.02217586486369498 ZIIXZZZX
term -0.010927235699192312 IZIXZZZX
term -0.00218359119769694 IIZXZZZX
term -0.024983718036386802 IIIYZZIY
term -0.027493520452076706 IIIYZIZY
term -0.002170199689921142 IIIYIZZY
term 0.019360746133040146 IIIYZZZY
term -0.02217586486369498 ZIIYZZZY
term -0.010927235699192312 IZIYZZZY
term -0.00218359119769694 IIZYZZZY
term -0.011804143683970486 IXXIXZZX
term -0.011804143683970486 IXYIYZZX
term -0.011804143683970486 IYXIXZZY
term -0.011804143683970486 IYYIYZZY
term -0.024010575314235505 YZZYXZZX
term 0.024010575314235505 XZZYYZZX
term 0.024010575314235505 YZZXXZZY
term -0.024010575314235505 XZZXYZZY
term 0.03706090005068947 XZXIIXZX
term 0.03706090005068947 YZYIIXZX
term 0.03706090005068947 XZXIIYZY
term 0.03706090005068947 YZYIIYZY
term 0.02525675636671898 IXZXIXZX
term 0.01305032473645396 IYZYIXZX
term 0.012206431630265021 IXZYIYZX
term 0.012206431630265021 IYZXIXZY
term 0.01305032473645396 IXZXIYZY
term 0.02525675636671898 IYZYIYZY
term -0.025323320762155564 IIXZXXZX
term -0.025323320762155564 IIYZYXZX
term -0.025323320762155564 IIXZXYZY
term -0.025323320762155564 IIYZYYZY
term -0.02380460119779139 YYIIIIXX
term 0.02380460119779139 XYIIIIYX
term 0.02380460119779139 YXIIIIXY
term -0.02380460119779139 XXIIIIYY
term -0.02570639793526107 IIYYIIXX
term 0.02570639793526107 IIXYIIYX
term 0.02570639793526107 IIYXIIXY
term -0.02570639793526107 IIXXIIYY
term -0.010656531663658987 IXZZXIXX
term -0.010656531663658987 IXZZYIYX
term -0.010656531663658987 IYZZXIXY
term -0.010656531663658987 IYZZYIYY
term -0.010656531663658987 YZZZZYXX
term 0.010656531663658987 XZZZZYYX
term 0.010656531663658987 YZZZZXXY
term -0.010656531663658987 XZZZZXYY
term -0.04011592205789045 IIIIYYXX
term 0.04011592205789045 IIIIXYYX
term 0.04011592205789045 IIIIYXXY
term -0.04011592205789045 IIIIXXYY
)raw";

struct Entry {
  std::string_view name;
  std::string_view text;
};

constexpr Entry kFixtures[] = {
    {"h2_sto3g_0p74", k_h2_sto3g_0p74},
    {"h4_chain_0p90", k_h4_chain_0p90},
};

}  // namespace

std::vector<std::string_view> builtin_fixture_names() {
  std::vector<std::string_view> names;
  for (const auto& e : kFixtures) names.push_back(e.name);
  return names;
}

std::optional<std::string_view> builtin_fixture_text(std::string_view name) {
  for (const auto& e : kFixtures)
    if (e.name == name) return e.text;
  return std::nullopt;
}

}  // namespace geovqe
