"""Knuth-Bendix completion of the presentation of DC_n.

Words over f_1..f_{n-1} are strings, f_i being the i-th lowercase letter.
Rules rewrite to the shortlex smaller side. Once the system is complete
its irreducible words are unique normal forms, so the presented monoid is
counted by enumerating them.
"""

# Utilities
import logging
import string
from collections import defaultdict

# Models
from api.dcm.models import PresentationInstance, PresentationReport

# Dcm
from api.dcm.generators import epsilon_matrix, word_matrix
from api.dcm.monoid import dc_monoid

# Boolmat
from api.boolmat.models import BoolMatrix

# Exceptions
from api.utils.exceptions import CapExceeded, InvalidInput

# Utils
from api.utils.config import presentation_max_n, rule_cap, word_cap


logger = logging.getLogger(__name__)

ROUND_LIMIT = 100


def presentation(n):
    """Idempotency, commutation, braid and the length five/six relations."""
    relations = []
    letters = range(1, n)
    for i in letters:
        relations.append(((i, i), (i,)))
    for i in letters:
        for j in letters:
            if i < j and j != i + 1:
                relations.append(((i, j), (j, i)))
    for i in letters:
        if i + 1 < n:
            relations.append(((i, i + 1, i), (i + 1, i, i + 1)))
    for i in letters:
        if i + 2 < n:
            relations.append(((i, i + 1, i + 2, i + 1, i), (i, i + 1, i + 2, i, i + 1, i)))
    return PresentationInstance(n=n, relations=relations)


def encode(word):
    if any(not 1 <= letter <= len(string.ascii_lowercase) for letter in word):
        raise InvalidInput('cannot encode the word {}'.format(word))
    return ''.join(string.ascii_lowercase[letter - 1] for letter in word)


def shortlex_key(word):
    return len(word), word


def _oriented(a, b):
    """(larger, smaller) in shortlex order."""
    return (a, b) if shortlex_key(a) > shortlex_key(b) else (b, a)


def rewriter(rules):
    """Leftmost reduction to an irreducible word, with the left sides looked up by length."""
    table = dict(rules)
    lengths = sorted({len(left) for left in table})

    def rewrite(word):
        end = 1
        while end <= len(word):
            for length in lengths:
                if length > end:
                    break
                start = end - length
                right = table.get(word[start:end])
                if right is not None:
                    # word[:start] is irreducible, resume right after it
                    word = word[:start] + right + word[end:]
                    end = start
                    break
            end += 1
        return word

    return rewrite


def reduce_word(word, rules):
    return rewriter(rules)(word)


def _rule_key(rule):
    return shortlex_key(rule[0]), shortlex_key(rule[1])


def interreduce(rules):
    """Equivalent rules where no left side contains another and right sides are irreducible."""
    rules = set(rules)
    changed = True
    while changed:
        changed = False
        for rule in sorted(rules, key=_rule_key):
            if rule not in rules:
                continue
            left, right = rule
            others = [other for other in rules if other != rule]
            if any(other[0] in left for other in others):
                rules.discard(rule)
                a, b = reduce_word(left, others), reduce_word(right, others)
                if a != b:
                    rules.add(_oriented(a, b))
                changed = True
                continue
            smaller = reduce_word(right, others)
            if smaller != right:
                rules.discard(rule)
                rules.add((left, smaller))
                changed = True
    return sorted(rules, key=_rule_key)


def critical_pairs(rules):
    """Unresolved overlaps of a suffix of one left side with a prefix of another."""
    by_prefix = defaultdict(list)
    for rule in rules:
        left = rule[0]
        for k in range(1, len(left)):
            by_prefix[left[:k]].append(rule)
    rewrite = rewriter(rules)
    found = set()
    for left1, right1 in rules:
        for k in range(1, len(left1)):
            overlap = left1[-k:]
            for left2, right2 in by_prefix.get(overlap, ()):
                first = rewrite(right1 + left2[k:])
                second = rewrite(left1[:-k] + right2)
                if first != second:
                    found.add(_oriented(first, second))
    return found


def complete(relations, rule_limit=None, round_limit=ROUND_LIMIT):
    """Shortlex Knuth-Bendix completion of ``relations`` (pairs of strings)."""
    rule_limit = rule_limit if rule_limit is not None else rule_cap()
    rules = interreduce(_oriented(a, b) for a, b in relations if a != b)
    for round_number in range(1, round_limit + 1):
        if len(rules) > rule_limit:
            logger.warning('completion stopped at %d rules', len(rules))
            raise CapExceeded('{} rewriting rules'.format(len(rules)), rule_limit)
        pending = critical_pairs(rules)
        logger.debug('round %d: %d rules, %d critical pairs', round_number, len(rules), len(pending))
        if not pending:
            return rules
        rules = interreduce(set(rules) | pending)
    raise CapExceeded('{} completion rounds'.format(round_limit), round_limit)


def normal_forms(alphabet, rules, limit=None):
    """Irreducible words in shortlex order; finite when the presented monoid is."""
    limit = limit if limit is not None else word_cap()
    by_last = defaultdict(list)
    for left, _ in rules:
        by_last[left[-1]].append(left)
    found = ['']
    frontier = ['']
    while frontier:
        following = []
        for word in frontier:
            for letter in alphabet:
                candidate = word + letter
                if not any(candidate.endswith(left) for left in by_last[letter]):
                    following.append(candidate)
        found.extend(following)
        if len(found) > limit:
            raise CapExceeded('{} normal forms'.format(len(found)), limit)
        frontier = following
    return found


def verify_presentation(n, force=False):
    """Compare the monoid presented by the relations with DC_n.

    The relations must hold between the generator matrices, and the normal
    forms of the completed system must map one to one onto DC_n.
    """
    if n < 1:
        raise InvalidInput('degree must be positive')
    limit = presentation_max_n()
    if n > limit and not force:
        raise CapExceeded('presentation degree {}'.format(n), limit)
    instance = presentation(n)
    relations = [(encode(a), encode(b)) for a, b in instance.relations]
    rules = complete(relations)
    forms = normal_forms(string.ascii_lowercase[:instance.generator_count], rules)
    generators = {i: epsilon_matrix(i, n) for i in range(1, n)}
    images = {'': BoolMatrix.identity(n)}
    for word in forms[1:]:
        images[word] = images[word[:-1]] * generators[string.ascii_lowercase.index(word[-1]) + 1]
    holds = all(word_matrix(a, n) == word_matrix(b, n) for a, b in instance.relations)
    table = dc_monoid(n)
    presented_size = len(forms)
    matches = holds and presented_size == len(table) and set(images.values()) == set(table.elements)
    rewrite = rewriter(rules)
    stable = all(rewrite(a) == rewrite(b) for a, b in relations)
    if not holds:
        logger.warning('degree %d: a defining relation fails in DC_n', n)
    if not matches:
        logger.warning('degree %d: presented size %d against |DC_n| = %d', n, presented_size, len(table))
    return PresentationReport(
        presented_size=presented_size,
        matches=matches,
        stable=stable,
        relations_hold=holds,
        rule_count=len(rules),
        longest_normal_form=len(forms[-1]),
    )