# funny テンソル A □ B: 交互の語による正規形と hom の有界列挙
from src.structcat.category import FiniteCategory, Functor, product_category
from src.common.errors import ComposabilityError
from src.common.settings import DEFAULT_WORD_LEN

from dataclasses import dataclass
from itertools import product
import logging

logger = logging.getLogger(__name__)

LEFT, RIGHT = 0, 1


@dataclass(frozen=True)
class Letter:
    """
    side = LEFT  : (f, b)  f は A の射、b は B の対象
    side = RIGHT : (a, g)  a は A の対象、g は B の射
    """

    side: int
    arrow: object
    fixed: object

    def __str__(self):
        return f"({self.arrow},{self.fixed})" if self.side == LEFT else f"({self.fixed},{self.arrow})"


@dataclass(frozen=True)
class FunnyArrow:
    """域・余域と既約な語（適用順）"""

    source: tuple
    target: tuple
    word: tuple

    def __str__(self):
        if not self.word:
            return f"id{self.source}"
        return " ; ".join(str(x) for x in self.word)


@dataclass
class HomEnumeration:
    arrows: list
    truncated: bool


class FunnyTensor:
    """
    対象は obA × obB、射は交互の語
    同じ側の隣り合う文字は合成し、恒等射の文字は消す（停止的かつ合流的）
    """

    def __init__(self, A: FiniteCategory, B: FiniteCategory):
        self.A = A
        self.B = B
        self.name = f"{A.name}□{B.name}"
        self.objects = tuple(product(A.objects, B.objects))

    def _cat(self, side):
        return self.A if side == LEFT else self.B

    def letter_source(self, x: Letter):
        cat = self._cat(x.side)
        return (cat.source[x.arrow], x.fixed) if x.side == LEFT else (x.fixed, cat.source[x.arrow])

    def letter_target(self, x: Letter):
        cat = self._cat(x.side)
        return (cat.target[x.arrow], x.fixed) if x.side == LEFT else (x.fixed, cat.target[x.arrow])

    def is_identity_letter(self, x: Letter) -> bool:
        return self._cat(x.side).is_identity(x.arrow)

    def reduce(self, word) -> tuple:
        """左から順に簡約する"""
        stack = []
        for x in word:
            if self.is_identity_letter(x):
                continue
            if stack and stack[-1].side == x.side:
                top = stack.pop()
                merged = self._cat(x.side).compose(x.arrow, top.arrow)
                y = Letter(x.side, merged, x.fixed)
                if not self.is_identity_letter(y):
                    stack.append(y)
            else:
                stack.append(x)
        return tuple(stack)

    def check_word(self, source, word) -> tuple:
        """語が source から合成可能なら余域を返す"""
        here = source
        for x in word:
            if self.letter_source(x) != here:
                raise ComposabilityError(f"{self.name}: 文字 {x} は {here} から合成できません")
            here = self.letter_target(x)
        return here

    def arrow(self, source, word) -> FunnyArrow:
        target = self.check_word(source, word)
        return FunnyArrow(source, target, self.reduce(word))

    def identity(self, obj) -> FunnyArrow:
        return FunnyArrow(obj, obj, ())

    def compose(self, g: FunnyArrow, f: FunnyArrow) -> FunnyArrow:
        """g∘f = f の語の後に g の語を連結して簡約"""
        if f.target != g.source:
            raise ComposabilityError(f"{self.name}: {g} と {f} は合成できません")
        return FunnyArrow(f.source, g.target, self.reduce(f.word + g.word))

    def left_generator(self, f, b) -> FunnyArrow:
        """V(-, b)(f)"""
        return self.arrow((self.A.source[f], b), (Letter(LEFT, f, b),))

    def right_generator(self, a, g) -> FunnyArrow:
        """V(a, -)(g)"""
        return self.arrow((a, self.B.source[g]), (Letter(RIGHT, g, a),))

    def letters_from(self, obj, side=None):
        """obj から出る非恒等な文字（side 指定時はその側のみ）"""
        a, b = obj
        out = []
        if side in (None, LEFT):
            out += [Letter(LEFT, f, b) for f in self.A.non_identity_arrows() if self.A.source[f] == a]
        if side in (None, RIGHT):
            out += [Letter(RIGHT, g, a) for g in self.B.non_identity_arrows() if self.B.source[g] == b]
        return out

    def reduced_words(self, source, max_len: int):
        """source から出る長さ max_len 以下の既約な語（長さ順、同じ長さは文字の順）"""
        level = [((), source)]
        yield (), source
        for _ in range(max_len):
            nxt = []
            for word, here in level:
                side = None if not word else 1 - word[-1].side
                for x in self.letters_from(here, side):
                    item = (word + (x,), self.letter_target(x))
                    nxt.append(item)
                    yield item
            level = nxt
            if not level:
                break

    def hom(self, source, target, max_len: int = DEFAULT_WORD_LEN) -> HomEnumeration:
        """長さ max_len 以下の射。長さ max_len + 1 の既約な語があれば truncated"""
        arrows = [FunnyArrow(source, target, w) for w, here in self.reduced_words(source, max_len) if here == target]
        truncated = any(len(w) == max_len + 1 for w, _ in self.reduced_words(source, max_len + 1))
        return HomEnumeration(arrows, truncated)

    # ---------- 書き換えの合流性 ----------

    def _steps(self, word):
        """1 ステップの書き換え: 恒等文字の削除、同じ側の隣接文字の合成"""
        for i, x in enumerate(word):
            if self.is_identity_letter(x):
                yield word[:i] + word[i + 1 :]
        for i in range(len(word) - 1):
            x, y = word[i], word[i + 1]
            if x.side == y.side:
                merged = Letter(x.side, self._cat(x.side).compose(y.arrow, x.arrow), x.fixed)
                yield word[:i] + (merged,) + word[i + 2 :]

    def normal_forms(self, word) -> set:
        """あらゆる書き換え順で到達する既約な語の集合"""
        seen, stack, out = set(), [tuple(word)], set()
        while stack:
            w = stack.pop()
            if w in seen:
                continue
            seen.add(w)
            nexts = list(self._steps(w))
            if not nexts:
                out.add(w)
            stack.extend(nexts)
        return out

    def all_letters(self):
        out = [Letter(LEFT, f, b) for f in self.A.arrows for b in self.B.objects]
        out += [Letter(RIGHT, g, a) for g in self.B.arrows for a in self.A.objects]
        return out

    def confluence_witness(self, max_len: int = 4):
        """長さ max_len 以下の合成可能な語で正規形が一意でない最初のもの（なければ None）"""
        letters = self.all_letters()
        for n in range(1, max_len + 1):
            for word in product(letters, repeat=n):
                if any(self.letter_target(word[i]) != self.letter_source(word[i + 1]) for i in range(n - 1)):
                    continue
                forms = self.normal_forms(word)
                if len(forms) != 1 or self.reduce(word) not in forms:
                    return word
        return None

    # ---------- 直積との比較 ----------

    def to_product(self, f: FunnyArrow):
        """恒等射を保つ比較関手 A□B -> A×B"""
        a, b = f.source
        left, right = self.A.identity[a], self.B.identity[b]
        for x in f.word:
            if x.side == LEFT:
                left = self.A.compose(x.arrow, left)
            else:
                right = self.B.compose(x.arrow, right)
        return (left, right)

    def to_finite_category(self, max_len: int = DEFAULT_WORD_LEN) -> FiniteCategory:
        """hom がすべて有限（max_len で打ち切られない）なら有限圏として返す"""
        arrows, source, target = [], {}, {}
        for obj in self.objects:
            for w, here in self.reduced_words(obj, max_len + 1):
                if len(w) > max_len:
                    raise ComposabilityError(f"{self.name}: 長さ {max_len} を超える射があり有限圏になりません")
                f = FunnyArrow(obj, here, w)
                arrows.append(f)
                source[f], target[f] = obj, here
        identity = {obj: FunnyArrow(obj, obj, ()) for obj in self.objects}
        comp = {}
        for g in arrows:
            for f in arrows:
                if target[f] == source[g]:
                    comp[(g, f)] = self.compose(g, f)
        return FiniteCategory(self.name, self.objects, tuple(arrows), source, target, identity, comp)


def funny_tensor(A: FiniteCategory, B: FiniteCategory) -> FunnyTensor:
    return FunnyTensor(A, B)


def compare_with_product(t: FunnyTensor, source, target, max_len: int = DEFAULT_WORD_LEN):
    """(|□-hom|, |×-hom|, 打ち切りの有無)"""
    enum = t.hom(source, target, max_len)
    prod = product_category(t.A, t.B)
    return len(enum.arrows), len(prod.hom(source, target)), enum.truncated


def generator_squares_commute(t: FunnyTensor) -> bool:
    """すべての生成元の正方形 (a',g)∘(f,b) = (f,b')∘(a,g) が □ で成り立つか"""
    for f in t.A.non_identity_arrows():
        for g in t.B.non_identity_arrows():
            a, a2 = t.A.source[f], t.A.target[f]
            b, b2 = t.B.source[g], t.B.target[g]
            one = t.compose(t.right_generator(a2, g), t.left_generator(f, b))
            two = t.compose(t.left_generator(f, b2), t.right_generator(a, g))
            if one != two:
                return False
    return True


def comparison_functor(t: FunnyTensor, max_len: int = DEFAULT_WORD_LEN) -> Functor:
    """有限な A□B から A×B への恒等対象の関手"""
    source = t.to_finite_category(max_len)
    target = product_category(t.A, t.B)
    return Functor(source, target, {x: x for x in source.objects}, {f: t.to_product(f) for f in source.arrows})
