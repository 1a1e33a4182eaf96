"""POS tagging backends emitting Penn Treebank category tags.

The default backend is a self-contained lexicon-plus-suffix tagger with
pinned rules (TAGGER_VERSION): a closed-class lexicon covers the high
frequency function words and irregular verb forms, suffix and shape
rules classify the open-class remainder, and a light context pass fixes
base-form verbs after modals/"to". It is nowhere near a statistical
tagger on a per-token basis, but it is deterministic, dependency-free,
and calibrated so that the noun/verb/other token fractions of ordinary
narrative English land close to published full-tagger values.

An NLTK-backed tagger is exposed for environments that have the library
and its model data; it raises TaggerUnavailable otherwise.
"""

from __future__ import annotations

import re

from .errors import TaggerUnavailable

TAGGER_VERSION = "builtin-lexicon-1.0"

#: Every tag the builtin tagger can emit (word tags plus punctuation).
TAG_INVENTORY = (
    "CC", "CD", "DT", "EX", "FW", "IN", "JJ", "JJR", "JJS", "MD",
    "NN", "NNS", "NNP", "NNPS", "PDT", "POS", "PRP", "PRP$",
    "RB", "RBR", "RBS", "RP", "TO", "UH",
    "VB", "VBD", "VBG", "VBN", "VBP", "VBZ",
    "WDT", "WP", "WP$", "WRB",
    ".", ",", ":", "(", ")", "``", "''",
)

_PUNCT_MAP = {
    ".": ".", "!": ".", "?": ".",
    ",": ",",
    ":": ":", ";": ":", "-": ":", "--": ":", "–": ":", "—": ":",
    "...": ":", "…": ":",
    "(": "(", "[": "(", "{": "(",
    ")": ")", "]": ")", "}": ")",
}

_OPEN_QUOTES = {'"', "'", "‘", "“", "`"}
_CLOSE_QUOTES = {'"', "'", "’", "”"}

_NUMBER = re.compile(r"\d+(?:[.,]\d+)*$")


def _lexicon() -> dict[str, str]:
    lex: dict[str, str] = {}

    def add(tag: str, words: str) -> None:
        for w in words.split():
            lex[w] = tag

    add("DT", "the a an this that these those some any no every each all both "
              "either neither another such")
    add("PDT", "half")
    add("IN", "of in on at by for with from into upon about against among "
              "between through during before after above below under over "
              "without within along across behind beyond near beside besides "
              "since until till while although though because if unless "
              "whether as than like unto amid amidst toward towards despite "
              "off round underneath whilst")
    add("CC", "and but or nor yet plus")
    add("TO", "to")
    add("EX", "there")
    add("PRP", "i you he she it we they me him us them myself yourself "
               "himself herself itself ourselves yourselves themselves "
               "oneself mine yours hers theirs ours thee thou ye")
    add("PRP$", "my your his her its our their thy thine")
    add("MD", "will would can could shall should may might must ought need "
              "dare cannot")
    add("WDT", "which whatever whichever")
    add("WP", "who whom whoever what")
    add("WP$", "whose")
    add("WRB", "when where why how whenever wherever however")
    add("UH", "oh ah alas yes hello well no hey hush pshaw hurrah")
    add("RP", "out up down away back forth aside apart")

    add("RB", "not never ever always often sometimes seldom now then "
              "here soon still again once twice also too very quite rather "
              "almost nearly just only even perhaps maybe indeed moreover "
              "nevertheless meanwhile instead already thus therefore "
              "anywhere everywhere nowhere somewhere else far "
              "enough ago quickly slowly suddenly presently "
              "together alone early late hard fast much more most less "
              "least so")

    # Frequent adjectives that no suffix rule would catch.
    add("JJ", "good great little old young new long short high low big small "
              "own same other many few several certain whole poor rich dark "
              "light white black red blue green grey gray deep broad wide "
              "narrow strange true false happy glad sorry sure full empty "
              "open hot cold warm cool dead alive quiet loud strong weak "
              "heavy soft clear plain quick slow easy free wild calm "
              "pale bright dim next final able ready pretty fine fair ill "
              "evil ancient modern common rare dear cheap wet dry clean "
              "dirty sweet bitter kind cruel gentle rough smooth sharp dull "
              "thick thin tall fresh")
    add("JJR", "better worse larger smaller older younger greater lesser "
               "elder further nearer higher lower deeper")
    add("JJS", "best worst largest smallest oldest youngest greatest least "
               "eldest furthest nearest highest lowest deepest")

    # Inflected forms of be/have/do get their exact verb tags.
    add("VB", "be")
    add("VBP", "am are have do")
    add("VBZ", "is has does")
    add("VBD", "was were had did")
    add("VBN", "been done")
    add("VBG", "being having doing")

    # Frequent verbs: base, third-person, and irregular past forms that
    # the -ed/-ing suffix rules cannot reach.
    add("VB", "go come see know think take get make find tell give feel "
              "say stand sit put run leave keep hold bring begin hear let "
              "mean meet pay read rise send set shake speak stop turn walk "
              "want wish look seem ask call move live believe happen write "
              "sing drink eat sleep fall fly grow lie lay lead lose ride "
              "ring sell seek shine shoot show shut sink sling smell "
              "spend spring steal strike swear sweep swim swing teach tear "
              "throw understand wake wear weep win wind draw drive fight "
              "forget forgive freeze hide hit hurt kneel bear beat become "
              "bend bite blow break build burn buy catch choose cling creep "
              "deal dig cast cost cut")
    add("VBZ", "goes comes sees knows thinks takes gets makes finds tells "
               "gives feels says stands sits puts runs leaves keeps holds "
               "brings begins hears lets means meets pays reads rises sends "
               "sets shakes speaks stops turns walks wants wishes looks "
               "seems asks calls moves lives believes happens writes falls "
               "grows lies leads loses rides sells shows shuts sinks draws "
               "drives becomes bears beats breaks builds buys catches "
               "chooses cuts")
    add("VBD", "said went came saw knew thought took got made found told "
               "gave felt stood sat ran kept held brought began heard meant "
               "met paid rose sent shook spoke wrote sang drank ate slept "
               "fell flew grew lay led lost rode rang sold sought shone "
               "shot showed shut sank slung smelt spent sprang stole struck "
               "swore swept swam swung taught tore threw understood woke "
               "wore wept won wound drew drove fought forgot forgave froze "
               "hid hit hurt knelt bore beat became bent bit blew broke "
               "built burnt bought caught chose clung crept dealt dug cast "
               "cost cut replied cried")
    add("VBN", "gone seen known taken given spoken written sung drunk eaten "
               "fallen flown grown lain lost ridden rung sold sought shown "
               "sunk spent sprung stolen struck sworn swum taught torn "
               "thrown understood woken worn wept won wound drawn driven "
               "fought forgotten forgiven frozen hidden knelt borne beaten "
               "become bent bitten blown broken built burnt bought caught "
               "chosen clung crept dealt dug")

    add("CD", "one two three four five six seven eight nine ten eleven "
              "twelve twenty thirty forty fifty hundred thousand million "
              "dozen zero")
    add("NN", "man woman time day way year thing world life hand part eye "
              "place work week case point number fact night home water "
              "room mother father house door head face side money story "
              "mind moment heart voice sea air sun road fire word body "
              "name people street tree wind light boy girl friend child "
              "wife son end morning evening table chair window wall floor "
              "foot feet sir madam mr mrs miss dr")
    return lex


_SUFFIX_RULES = (
    ("ly", "RB"),
    ("ing", "VBG"),
    ("ed", "VBD"),
    ("ness", "NN"),
    ("ment", "NN"),
    ("tion", "NN"),
    ("sion", "NN"),
    ("ful", "JJ"),
    ("ous", "JJ"),
    ("less", "JJ"),
    ("ish", "JJ"),
    ("ive", "JJ"),
    ("able", "JJ"),
    ("ible", "JJ"),
)

#: Tags after which a lexicon "VB" base form stays VB; elsewhere
#: sentence position decides VBP.
_BASE_CONTEXT = {"MD", "TO"}


class BuiltinTagger:
    """Deterministic lexicon + suffix + shape tagger (pinned rules)."""

    name = "builtin"
    version = TAGGER_VERSION

    def __init__(self) -> None:
        self._lex = _lexicon()

    def tag_sentence(self, tokens: list[str]) -> list[tuple[str, str]]:
        tagged: list[tuple[str, str]] = []
        prev_tag = ""
        saw_word = False
        for token in tokens:
            tag = self._tag_one(token, prev_tag, sentence_initial=not saw_word)
            tagged.append((token, tag))
            prev_tag = tag
            if tag not in (".", ",", ":", "(", ")", "``", "''"):
                saw_word = True
        return tagged

    def _tag_one(self, token: str, prev_tag: str, sentence_initial: bool) -> str:
        if token in _PUNCT_MAP:
            return _PUNCT_MAP[token]
        if token in _OPEN_QUOTES or token in _CLOSE_QUOTES:
            return "``" if prev_tag in ("", "(", "``") else "''"
        if not any(ch.isalpha() for ch in token):
            if _NUMBER.match(token):
                return "CD"
            return ":"  # stray separator characters

        lower = token.lower()
        lex_tag = self._lex.get(lower)
        if lex_tag is not None:
            if lex_tag == "VB" and prev_tag not in _BASE_CONTEXT:
                # outside modal/to context a base form is finite
                return "VBP"
            return lex_tag

        if token[0].isupper() and not sentence_initial:
            return "NNPS" if lower.endswith("s") and not lower.endswith("ss") else "NNP"

        for suffix, tag in _SUFFIX_RULES:
            if lower.endswith(suffix) and len(lower) > len(suffix) + 1:
                if tag == "VBD" and prev_tag in _BASE_CONTEXT:
                    return "VB"  # "to X-ed" never happens; guard anyway
                return tag

        if lower.endswith("'s"):
            return "NN"  # possessives kept whole; noun head
        if lower.endswith("s") and not lower.endswith(("ss", "us", "is")):
            return "NNS"
        return "NN"


class NltkTagger:
    """Optional backend delegating to NLTK's recommended tagger."""

    name = "nltk"

    def __init__(self) -> None:
        try:
            import nltk
        except ImportError as err:
            raise TaggerUnavailable("nltk is not installed") from err
        try:
            nltk.pos_tag(["probe"])
        except LookupError as err:
            raise TaggerUnavailable(
                "nltk tagger model data is not available"
            ) from err
        self._pos_tag = nltk.pos_tag
        self.version = f"nltk-{nltk.__version__}"

    def tag_sentence(self, tokens: list[str]) -> list[tuple[str, str]]:
        return self._pos_tag(tokens)


def make_tagger(backend: str = "builtin"):
    if backend == "builtin":
        return BuiltinTagger()
    if backend == "nltk":
        return NltkTagger()
    raise TaggerUnavailable(f"unknown tagger backend {backend!r}")
