# 組み込みの 2 次元構造: sesquicategory と premonoidal 圏の例
from src.algebra.monoid import FiniteMonoid, MonoidMap, cyclic_group
from src.structcat.category import category_from_table, composable_pair_category
from src.structcat.premonoidal import PremonoidalData, writer_functor, writer_premonoidal
from src.structcat.sesqui import SesquiData, monoid_labelled_sesqui


def left_zero_monoid() -> FiniteMonoid:
    """{e, l1, l2}、l·x = l（非可換）"""
    return FiniteMonoid("LZ3", 3, (0, 1, 2, 1, 1, 1, 2, 2, 2), 0)


def idempotent_monoid() -> FiniteMonoid:
    """{e, z}、z·z = z"""
    return FiniteMonoid("I2", 2, (0, 1, 1, 1), 0)


# ---------- sesquicategory ----------


def free_sesqui_base():
    """a -f,g-> b -h,k-> c と 4 本の合成"""
    arrows = {"f": ("a", "b"), "g": ("a", "b"), "h": ("b", "c"), "k": ("b", "c")}
    comp = {}
    for x in ("h", "k"):
        for y in ("f", "g"):
            arrows[x + y] = ("a", "c")
            comp[(x, y)] = x + y
    return category_from_table("a=>b=>c", ["a", "b", "c"], arrows, comp)


def free_sesqui() -> SesquiData:
    """
    2-セル alpha: f => g と beta: h => k から生成される sesquicategory
    beta g ∘ h alpha と k alpha ∘ beta f は別のセル（交換律が破れる）
    """
    X = free_sesqui_base()
    cells = {f"id_{x}": (x, x) for x in X.arrows}
    ident = {x: f"id_{x}" for x in X.arrows}
    cells.update({
        "alpha": ("f", "g"),
        "beta": ("h", "k"),
        "h_alpha": ("hf", "hg"),
        "k_alpha": ("kf", "kg"),
        "beta_f": ("hf", "kf"),
        "beta_g": ("hg", "kg"),
        "betag_halpha": ("hf", "kg"),
        "kalpha_betaf": ("hf", "kg"),
    })
    wl, wr = {}, {}
    for h, x in X.composable_pairs():
        wl[(h, ident[x])] = ident[X.compose(h, x)]
        wr[(ident[h], x)] = ident[X.compose(h, x)]
    for cell, (f, _) in cells.items():
        if cell in ident.values():
            continue
        wl[(X.identity[X.target[f]], cell)] = cell
        wr[(cell, X.identity[X.source[f]])] = cell
    wl[("h", "alpha")] = "h_alpha"
    wl[("k", "alpha")] = "k_alpha"
    wr[("beta", "f")] = "beta_f"
    wr[("beta", "g")] = "beta_g"

    vc = {}
    for cell, (f, g) in cells.items():
        vc[(ident[g], cell)] = cell
        vc[(cell, ident[f])] = cell
    vc[("beta_g", "h_alpha")] = "betag_halpha"
    vc[("k_alpha", "beta_f")] = "kalpha_betaf"
    return SesquiData("free(alpha,beta)", X, cells, ident, wl, wr, vc)


def commutative_cells() -> SesquiData:
    """Z/2 のラベルを持つ 2-圏（a -> b -> c 上）"""
    return monoid_labelled_sesqui(composable_pair_category(), cyclic_group(2))


def noncommutative_cells() -> SesquiData:
    return monoid_labelled_sesqui(composable_pair_category(), left_zero_monoid())


def whisker_unit_defect() -> SesquiData:
    """id_b による左 whiskering が f_1 を f_0 に送る"""
    S = commutative_cells()
    return S.seeded("whisk_left", ("id_b", "f_1"), "f_0")


# ---------- premonoidal ----------


def monoidal_writer() -> PremonoidalData:
    """可換な記録 Z/2 の writer（monoidal）"""
    return writer_premonoidal(cyclic_group(2), 2, "writer_Z2")


def noncentral_writer() -> PremonoidalData:
    """非可換な記録 LZ3 の writer（w1_a, w2_a は中心でない）"""
    return writer_premonoidal(left_zero_monoid(), 2, "writer_LZ3")


def pentagon_defect() -> PremonoidalData:
    return monoidal_writer().seeded("alpha", (0, 0, 0), "w1_0")


def idempotent_writer() -> PremonoidalData:
    return writer_premonoidal(idempotent_monoid(), 2, "writer_I2")


def noncentral_freyd():
    """(A, M, F): F は z を中心でない l1 に送る"""
    A, M = idempotent_writer(), noncentral_writer()
    hom = MonoidMap(idempotent_monoid(), left_zero_monoid(), (0, 1))
    return A, M, writer_functor(A, M, hom)
