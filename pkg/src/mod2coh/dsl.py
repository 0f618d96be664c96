"""Line-oriented task-file language.

One block per line, ``#`` starts a comment, element literals are quoted
canonical text::

    space RP3 gens (x:1:4) cap 3
    space RPinf gens (x:1:inf) cap 24
    space CP2 gens (y:2:3) cap 4 sq (y = "y^1 + y^2")
    space RP2xRP3 product RP2 RP3
    bundle nu13 over RP1 rank 2 sw "1 + x^2"
    map f : RP1 -> RP3 codim 2 pullback (x = "x") umkehr1 "x^2" normal nu13
    map c2 : S1 -> S1 codim 0 pullback (u = "0") table (1 -> "0") (u^1 -> "u^1") normal trivS1
    map h compose outer inner
    map F product RP2 f
    task t1 thom f
    task t2 equivariant f ell 4
    task t3 whitney f
    task t4 adem 1 2 on RP8 upto 8
    task t5 axioms on RPinf upto 24
    task t6 cover c2 sheets 2
    task t7 internal-op on RP3 ell 4 upto 3
    task t8 projection f
    task t9 functor h outer inner
    task t10 product-rule F RP2 f

Names may be used before they are declared.  :func:`parse` returns a
:class:`TaskFile`; :func:`serialize` writes one back in canonical form.
"""

import re
from dataclasses import dataclass, field

from .charclass import VirtualBundle
from .errors import Mod2CohError, ParseError
from .f2poly import Generator, GradedElement, RingPresentation
from .topology import MapData, Space, compose, product_space, product_with_space
from .verify import VerificationTask

__all__ = ["TaskFile", "parse", "serialize", "load"]

_TOKEN_RE = re.compile(r'"[^"]*"|->|[():=]|[^\s():="]+')
_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_.\-]*'*\Z")


@dataclass
class Block:
    kind: str  # space | product-space | bundle | map | compose | product-map | task
    name: str
    line: int
    data: dict


@dataclass
class TaskFile:
    blocks: list = field(default_factory=list)
    spaces: dict = field(default_factory=dict)
    bundles: dict = field(default_factory=dict)
    maps: dict = field(default_factory=dict)
    tasks: list = field(default_factory=list)

    def all_tasks(self):
        return list(self.tasks)


class _Cursor:
    def __init__(self, tokens, line):
        self.tokens = tokens
        self.pos = 0
        self.line = line

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self, what="token"):
        tok = self.peek()
        if tok is None:
            raise ParseError(f"unexpected end of line, expected {what}", self.line)
        self.pos += 1
        return tok

    def expect(self, literal):
        tok = self.next(repr(literal))
        if tok != literal:
            raise ParseError(f"expected {literal!r}, got {tok!r}", self.line)

    def ident(self, what="identifier"):
        tok = self.next(what)
        if not _IDENT_RE.match(tok):
            raise ParseError(f"bad {what} {tok!r}", self.line)
        return tok

    def integer(self, what="integer"):
        tok = self.next(what)
        if not re.fullmatch(r"-?\d+", tok):
            raise ParseError(f"expected {what}, got {tok!r}", self.line)
        return int(tok)

    def string(self, what="quoted element"):
        tok = self.next(what)
        if len(tok) < 2 or tok[0] != '"' or tok[-1] != '"':
            raise ParseError(f"expected {what}, got {tok!r}", self.line)
        return tok[1:-1]

    def done(self):
        if self.peek() is not None:
            raise ParseError(f"unexpected trailing {self.peek()!r}", self.line)


def _parse_line(tokens, line):
    cur = _Cursor(tokens, line)
    head = cur.next()
    if head == "space":
        name = cur.ident("space name")
        mode = cur.next("'gens' or 'product'")
        if mode == "product":
            left, right = cur.ident("space"), cur.ident("space")
            cur.done()
            return Block("product-space", name, line, {"left": left, "right": right})
        if mode != "gens":
            raise ParseError(f"expected 'gens' or 'product', got {mode!r}", line)
        gens = []
        while cur.peek() == "(":
            cur.next()
            g = cur.next("generator name")
            cur.expect(":")
            deg = cur.integer("degree")
            cur.expect(":")
            trunc = cur.next("truncation")
            cur.expect(")")
            if trunc == "inf":
                tr = None
            elif trunc.isdigit():
                tr = int(trunc)
            else:
                raise ParseError(f"truncation must be an integer or 'inf', got {trunc!r}", line)
            gens.append((g, deg, tr))
        cur.expect("cap")
        cap = cur.integer("cap")
        sq = []
        if cur.peek() == "sq":
            cur.next()
            while cur.peek() == "(":
                cur.next()
                g = cur.next("generator name")
                cur.expect("=")
                sq.append((g, cur.string()))
                cur.expect(")")
        cur.done()
        return Block("space", name, line, {"gens": gens, "cap": cap, "sq": sq})

    if head == "bundle":
        name = cur.ident("bundle name")
        cur.expect("over")
        space = cur.ident("space")
        cur.expect("rank")
        rank = cur.integer("rank")
        cur.expect("sw")
        total = cur.string()
        cur.done()
        return Block("bundle", name, line, {"space": space, "rank": rank, "sw": total})

    if head == "map":
        name = cur.ident("map name")
        mode = cur.next("':', 'compose' or 'product'")
        if mode == "compose":
            outer, inner = cur.ident("map"), cur.ident("map")
            cur.done()
            return Block("compose", name, line, {"outer": outer, "inner": inner})
        if mode == "product":
            space, f = cur.ident("space"), cur.ident("map")
            cur.done()
            return Block("product-map", name, line, {"space": space, "map": f})
        if mode != ":":
            raise ParseError(f"expected ':', 'compose' or 'product', got {mode!r}", line)
        src = cur.ident("source space")
        cur.expect("->")
        tgt = cur.ident("target space")
        cur.expect("codim")
        codim = cur.integer("codim")
        cur.expect("pullback")
        pull = []
        while cur.peek() == "(":
            cur.next()
            g = cur.next("generator name")
            cur.expect("=")
            pull.append((g, cur.string()))
            cur.expect(")")
        data = {"source": src, "target": tgt, "codim": codim, "pullback": pull}
        how = cur.next("'umkehr1' or 'table'")
        if how == "umkehr1":
            data["umkehr1"] = cur.string()
        elif how == "table":
            rows = []
            while cur.peek() == "(":
                cur.next()
                mono = cur.next("monomial")
                cur.expect("->")
                rows.append((mono, cur.string()))
                cur.expect(")")
            data["table"] = rows
        else:
            raise ParseError(f"expected 'umkehr1' or 'table', got {how!r}", line)
        cur.expect("normal")
        data["normal"] = cur.ident("bundle")
        cur.done()
        return Block("map", name, line, data)

    if head == "task":
        tid = cur.ident("task id")
        kind = cur.next("task kind")
        d = {"kind": kind}
        if kind in ("thom", "whitney", "projection"):
            d["target"] = cur.ident("map")
        elif kind == "equivariant":
            d["target"] = cur.ident("map")
            cur.expect("ell")
            d["ell"] = cur.integer("ell")
        elif kind == "adem":
            d["a"] = cur.integer("a")
            d["b"] = cur.integer("b")
            cur.expect("on")
            d["target"] = cur.ident("space")
            cur.expect("upto")
            d["degree"] = cur.integer("degree bound")
        elif kind == "axioms":
            cur.expect("on")
            d["target"] = cur.ident("space")
            cur.expect("upto")
            d["degree"] = cur.integer("degree bound")
        elif kind == "internal-op":
            cur.expect("on")
            d["target"] = cur.ident("space")
            cur.expect("ell")
            d["ell"] = cur.integer("ell")
            cur.expect("upto")
            d["degree"] = cur.integer("degree bound")
        elif kind == "cover":
            d["target"] = cur.ident("map")
            cur.expect("sheets")
            d["sheets"] = cur.integer("sheets")
        elif kind == "functor":
            d["target"] = cur.ident("map")
            d["others"] = (cur.ident("map"), cur.ident("map"))
        elif kind == "product-rule":
            d["target"] = cur.ident("map")
            d["others"] = (cur.ident("space"), cur.ident("map"))
        else:
            raise ParseError(f"unknown task kind {kind!r}", line)
        cur.done()
        return Block("task", tid, line, d)

    raise ParseError(f"unknown block {head!r}", line)


def _tokenize(text, line):
    pos = 0
    tokens = []
    for m in _TOKEN_RE.finditer(text):
        gap = text[pos : m.start()]
        if gap.strip():
            raise ParseError(f"cannot tokenize {gap.strip()!r}", line)
        tokens.append(m.group(0))
        pos = m.end()
    if text[pos:].strip():
        raise ParseError(f"cannot tokenize {text[pos:].strip()!r}", line)
    if any(t.startswith('"') and (len(t) < 2 or not t.endswith('"')) for t in tokens):
        raise ParseError("unterminated string", line)
    if text.count('"') % 2:
        raise ParseError("unterminated string", line)
    return tokens


class _Resolver:
    def __init__(self, blocks, prelude):
        self.blocks = {}
        self.tf = TaskFile(blocks=blocks)
        if prelude is not None:
            self.tf.spaces.update(prelude.spaces)
            self.tf.bundles.update(prelude.bundles)
            self.tf.maps.update(prelude.maps)
        taken = set(self.tf.spaces) | set(self.tf.bundles) | set(self.tf.maps)
        task_ids = {t.id for t in prelude.tasks} if prelude is not None else set()
        for b in blocks:
            if b.kind == "task":
                if b.name in task_ids:
                    raise ParseError(f"duplicate task id {b.name!r}", b.line)
                task_ids.add(b.name)
                continue
            if b.name in taken or b.name in self.blocks:
                raise ParseError(f"duplicate id {b.name!r}", b.line)
            self.blocks[b.name] = b
        self.active = set()

    def _get(self, name, table, kinds, line, what):
        if name in table:
            return table[name]
        b = self.blocks.get(name)
        if b is None or b.kind not in kinds:
            raise ParseError(f"unresolved reference to {what} {name!r}", line)
        if name in self.active:
            raise ParseError(f"circular reference through {name!r}", line)
        self.active.add(name)
        try:
            obj = self._build(b)
        except ParseError:
            raise
        except Mod2CohError as exc:
            raise ParseError(f"{b.name}: {exc}", b.line) from exc
        finally:
            self.active.discard(name)
        table[name] = obj
        return obj

    def space(self, name, line):
        return self._get(name, self.tf.spaces, ("space", "product-space"), line, "space")

    def bundle(self, name, line):
        return self._get(name, self.tf.bundles, ("bundle",), line, "bundle")

    def map(self, name, line):
        return self._get(name, self.tf.maps, ("map", "compose", "product-map"), line, "map")

    def _build(self, b):
        d = b.data
        if b.kind == "space":
            gens = [Generator(g, deg, tr) for g, deg, tr in d["gens"]]
            return Space(b.name, RingPresentation(gens, dict(d["sq"]), cap=d["cap"]))
        if b.kind == "product-space":
            return product_space(self.space(d["left"], b.line), self.space(d["right"], b.line), b.name)
        if b.kind == "bundle":
            ring = self.space(d["space"], b.line).ring
            return VirtualBundle(ring, d["rank"], ring.element(d["sw"]))
        if b.kind == "compose":
            return compose(self.map(d["outer"], b.line), self.map(d["inner"], b.line), b.name)
        if b.kind == "product-map":
            return product_with_space(self.space(d["space"], b.line), self.map(d["map"], b.line), b.name)
        src = self.space(d["source"], b.line)
        tgt = self.space(d["target"], b.line)
        normal = self.bundle(d["normal"], b.line)
        pull = dict(d["pullback"])
        if len(pull) != len(d["pullback"]):
            raise ParseError(f"{b.name}: repeated generator in pullback", b.line)
        kw = {}
        if "umkehr1" in d:
            kw["fundamental"] = tgt.ring.element(d["umkehr1"])
        else:
            table = {}
            for mono, val in d["table"]:
                m = src.ring.element(mono)
                if len(m.terms) != 1:
                    raise ParseError(f"{b.name}: table key {mono!r} is not a nonzero monomial", b.line)
                (key,) = m.terms
                if key in table:
                    raise ParseError(f"{b.name}: table key {mono!r} repeated", b.line)
                table[key] = val
            kw["table"] = table
        return MapData(b.name, src, tgt, d["codim"], pull, normal, **kw)

    def resolve(self):
        for b in self.tf.blocks:
            if b.kind == "space" or b.kind == "product-space":
                self.space(b.name, b.line)
            elif b.kind == "bundle":
                self.bundle(b.name, b.line)
            elif b.kind in ("map", "compose", "product-map"):
                self.map(b.name, b.line)
        for b in self.tf.blocks:
            if b.kind != "task":
                continue
            d = dict(b.data)
            kind = d.pop("kind")
            try:
                task = VerificationTask(b.name, kind, **d)
            except (TypeError, ValueError) as exc:
                raise ParseError(f"{b.name}: {exc}", b.line) from exc
            if kind in ("axioms", "adem", "internal-op"):
                self.space(task.target, b.line)
            else:
                self.map(task.target, b.line)
            if kind == "functor":
                for n in task.others:
                    self.map(n, b.line)
            if kind == "product-rule":
                self.space(task.others[0], b.line)
                self.map(task.others[1], b.line)
            if kind == "adem" and not (task.a >= 0 and task.a < 2 * task.b):
                raise ParseError(f"{b.name}: Adem relation needs 0 <= a < 2b", b.line)
            if task.ell is not None and task.ell < 1:
                raise ParseError(f"{b.name}: ell must be >= 1", b.line)
            self.tf.tasks.append(task)
        return self.tf


def parse(text, prelude=None):
    """Parse task-file source.  Names from ``prelude`` (a TaskFile) are visible but not re-declared."""
    blocks = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        blocks.append(_parse_line(_tokenize(body, lineno), lineno))
    return _Resolver(blocks, prelude).resolve()


def load(path, prelude=None):
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read(), prelude)


# -- serialization -----------------------------------------------------------


def _fmt_trunc(t):
    return "inf" if t is None else str(t)


def _space_line(space):
    ring = space.ring
    gens = " ".join(f"({g.name}:{g.degree}:{_fmt_trunc(g.truncation)})" for g in ring.generators)
    cap = ring.caps[0][2] if ring.caps else ring.top_degree
    parts = ["space", space.name, "gens"] + ([gens] if gens else []) + ["cap", str(cap)]
    rules = []
    for g in ring.generators:
        rule = ring.sq_rule(g.name)
        if g.degree == 1 and rule == ring.gen(g.name) + ring.gen(g.name) ** 2:
            continue
        rules.append(f'({g.name} = "{rule}")')
    if rules:
        parts += ["sq"] + rules
    return " ".join(parts)


def _task_line(t):
    head = f"task {t.id} {t.kind}"
    if t.kind in ("thom", "whitney", "projection"):
        return f"{head} {t.target}"
    if t.kind == "equivariant":
        return f"{head} {t.target} ell {t.ell}"
    if t.kind == "adem":
        return f"{head} {t.a} {t.b} on {t.target} upto {t.degree}"
    if t.kind == "axioms":
        return f"{head} on {t.target} upto {t.degree}"
    if t.kind == "internal-op":
        return f"{head} on {t.target} ell {t.ell} upto {t.degree}"
    if t.kind == "cover":
        return f"{head} {t.target} sheets {t.sheets}"
    return f"{head} {t.target} {' '.join(t.others)}"


def serialize(tf):
    """Canonical source for the blocks of ``tf`` (elements re-rendered in canonical form)."""
    lines = []
    tasks = iter(tf.tasks)
    for b in tf.blocks:
        d = b.data
        if b.kind == "space":
            lines.append(_space_line(tf.spaces[b.name]))
        elif b.kind == "product-space":
            lines.append(f"space {b.name} product {d['left']} {d['right']}")
        elif b.kind == "bundle":
            xi = tf.bundles[b.name]
            lines.append(f'bundle {b.name} over {d["space"]} rank {xi.rank} sw "{xi.total}"')
        elif b.kind == "compose":
            lines.append(f"map {b.name} compose {d['outer']} {d['inner']}")
        elif b.kind == "product-map":
            lines.append(f"map {b.name} product {d['space']} {d['map']}")
        elif b.kind == "map":
            f = tf.maps[b.name]
            pull = " ".join(f'({g} = "{f.pullback_of(g)}")' for g in f.target.ring.names)
            head = f"map {b.name} : {d['source']} -> {d['target']} codim {f.codim} pullback"
            if pull:
                head += " " + pull
            if f.fundamental is not None:
                um = f'umkehr1 "{f.fundamental}"'
            else:
                S = f.source.ring
                rows = " ".join(f'({GradedElement(S, frozenset([m]))} -> "{f.table[m]}")' for m in S.basis())
                um = f"table {rows}"
            lines.append(f"{head} {um} normal {d['normal']}")
        elif b.kind == "task":
            lines.append(_task_line(next(tasks)))
    return "\n".join(lines) + "\n"
