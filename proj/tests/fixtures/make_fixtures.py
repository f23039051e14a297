#!/usr/bin/env python3
# Copyright 2026 The repairlens Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates the JSONL fixtures under tests/fixtures.

Labels for the syntax fixtures come from construction: the hand-written
methods are valid Java, every mutant deletes exactly one brace, semicolon or
parenthesis token. Run `repairlens check` over syntax_fidelity.jsonl after
regenerating to confirm the reference parser agrees with every label.
"""

import json
import os
import random

HERE = os.path.dirname(os.path.abspath(__file__))

VALID_METHODS = [
    # CodeXGLUE-style abstracted, single line, space-separated tokens.
    "int METHOD_1 ( ) { return 0 ; }",
    "public void METHOD_1 ( TYPE_1 VAR_1 ) { this . VAR_2 = VAR_1 ; }",
    "public TYPE_1 METHOD_1 ( ) { return VAR_1 ; }",
    "public boolean METHOD_1 ( java.lang.Object VAR_1 ) { if ( ( this ) == VAR_1 ) return true ; if ( ! ( VAR_1 instanceof TYPE_1 ) ) return false ; return VAR_2 . equals ( ( ( TYPE_1 ) ( VAR_1 ) ) . VAR_2 ) ; }",
    "public static void METHOD_1 ( java.lang.String [ ] VAR_1 ) { TYPE_1 VAR_2 = new TYPE_1 ( ) ; VAR_2 . METHOD_2 ( ) ; }",
    "private int METHOD_1 ( int VAR_1 , int VAR_2 ) { return ( VAR_1 + VAR_2 ) * 2 ; }",
    "public void METHOD_1 ( ) { try { VAR_1 . METHOD_2 ( ) ; } catch ( TYPE_1 VAR_2 ) { VAR_2 . METHOD_3 ( ) ; } }",
    "public java.util.List < TYPE_1 > METHOD_1 ( ) { return new java.util.ArrayList < TYPE_1 > ( VAR_1 ) ; }",
    "protected void METHOD_1 ( TYPE_1 VAR_1 ) { if ( VAR_1 != null ) { VAR_2 . add ( VAR_1 ) ; } }",
    "public int METHOD_1 ( ) { int VAR_1 = 0 ; for ( int VAR_2 = 0 ; VAR_2 < ( VAR_3 . size ( ) ) ; VAR_2 ++ ) { VAR_1 += VAR_3 . get ( VAR_2 ) ; } return VAR_1 ; }",
    "public void METHOD_1 ( ) { while ( VAR_1 . METHOD_2 ( ) ) { METHOD_3 ( ) ; } }",
    "public TYPE_1 METHOD_1 ( java.lang.String VAR_1 ) throws TYPE_2 { return VAR_2 . METHOD_2 ( VAR_1 , VAR_3 ) ; }",
    "@ java.lang.Override public java.lang.String toString ( ) { return ( \"TYPE_1\" + ( VAR_1 ) ) + \"}\" ; }",
    "public void METHOD_1 ( int VAR_1 ) { switch ( VAR_1 ) { case 0 : METHOD_2 ( ) ; break ; default : METHOD_3 ( ) ; } }",
    "public synchronized void METHOD_1 ( ) { VAR_1 = ( VAR_1 ) + 1 ; }",
    "public static TYPE_1 METHOD_1 ( TYPE_2 VAR_1 ) { return VAR_1 == null ? null : new TYPE_1 ( VAR_1 ) ; }",
    "public void METHOD_1 ( final TYPE_1 VAR_1 ) { VAR_2 . METHOD_2 ( new TYPE_2 ( ) { public void METHOD_3 ( ) { VAR_1 . METHOD_4 ( ) ; } } ) ; }",
    "private void METHOD_1 ( ) throws java.io.IOException { VAR_1 . close ( ) ; }",
    "public int METHOD_1 ( int [ ] VAR_1 ) { int VAR_2 = VAR_1 [ 0 ] ; for ( int VAR_3 : VAR_1 ) { if ( VAR_3 > VAR_2 ) VAR_2 = VAR_3 ; } return VAR_2 ; }",
    "public void METHOD_1 ( ) { do { VAR_1 -- ; } while ( VAR_1 > 0 ) ; }",
    "public TYPE_1 METHOD_1 ( ) { synchronized ( VAR_1 ) { return VAR_2 ; } }",
    "public void METHOD_1 ( ) { VAR_1 . forEach ( ( VAR_2 ) -> VAR_3 . add ( VAR_2 ) ) ; }",
    "public long METHOD_1 ( ) { return ( ( long ) ( VAR_1 ) ) << 32 ; }",
    "public void METHOD_1 ( TYPE_1 VAR_1 ) { assert VAR_1 != null ; VAR_2 = VAR_1 ; }",
    "public boolean METHOD_1 ( ) { return ( VAR_1 ) && ( ! ( VAR_2 . isEmpty ( ) ) ) ; }",
    # Concrete Java, multi-line.
    "public int sum(int a, int b) {\n    return a + b;\n}",
    "static boolean isEven(int n) {\n    return n % 2 == 0;\n}",
    "public String greet(String name) {\n    if (name == null) {\n        return \"hello\";\n    }\n    return \"hello \" + name;\n}",
    "void swap(int[] xs, int i, int j) {\n    int tmp = xs[i];\n    xs[i] = xs[j];\n    xs[j] = tmp;\n}",
    "public static int factorial(int n) {\n    return n <= 1 ? 1 : n * factorial(n - 1);\n}",
    "private double average(java.util.List<Double> values) {\n    double total = 0;\n    for (double v : values) {\n        total += v;\n    }\n    return values.isEmpty() ? 0 : total / values.size();\n}",
    "public void close() throws java.io.IOException {\n    if (stream != null) {\n        stream.close();\n        stream = null;\n    }\n}",
    "public <T extends Comparable<T>> T max(T a, T b) {\n    return a.compareTo(b) >= 0 ? a : b;\n}",
    "public int indexOf(String[] items, String target) {\n    for (int i = 0; i < items.length; i++) {\n        if (items[i].equals(target)) {\n            return i;\n        }\n    }\n    return -1;\n}",
    "@Override\npublic int hashCode() {\n    return java.util.Objects.hash(id, name);\n}",
    "public java.util.Map<String, Integer> countWords(String text) {\n    java.util.Map<String, Integer> counts = new java.util.HashMap<>();\n    for (String w : text.split(\" \")) {\n        counts.merge(w, 1, Integer::sum);\n    }\n    return counts;\n}",
    "public void run() {\n    try {\n        work();\n    } catch (RuntimeException e) {\n        log(e);\n    } finally {\n        cleanup();\n    }\n}",
    "public boolean contains(int[] xs, int x) {\n    return java.util.Arrays.stream(xs).anyMatch(v -> v == x);\n}",
    "char firstChar(String s) {\n    return s.isEmpty() ? '\\0' : s.charAt(0);\n}",
    "public Node reverse(Node head) {\n    Node prev = null;\n    while (head != null) {\n        Node next = head.next;\n        head.next = prev;\n        prev = head;\n        head = next;\n    }\n    return prev;\n}",
    "public static long gcd(long a, long b) {\n    while (b != 0) {\n        long t = a % b;\n        a = b;\n        b = t;\n    }\n    return a;\n}",
    "protected final void setName(String name) {\n    this.name = java.util.Objects.requireNonNull(name);\n}",
    "public int[] copy(int[] src) {\n    int[] dst = new int[src.length];\n    System.arraycopy(src, 0, dst, 0, src.length);\n    return dst;\n}",
    "public String label(int code) {\n    switch (code) {\n        case 1:\n            return \"one\";\n        case 2:\n            return \"two\";\n        default:\n            return \"many\";\n    }\n}",
    "public void await(Object lock) throws InterruptedException {\n    synchronized (lock) {\n        while (!ready) {\n            lock.wait();\n        }\n    }\n}",
    "public Runnable task(final int id) {\n    return new Runnable() {\n        @Override\n        public void run() {\n            process(id);\n        }\n    };\n}",
    "boolean inRange(int x, int lo, int hi) {\n    return x >= lo && x < hi;\n}",
    "public StringBuilder join(java.util.List<String> parts, char sep) {\n    StringBuilder sb = new StringBuilder();\n    for (int i = 0; i < parts.size(); i++) {\n        if (i > 0) sb.append(sep);\n        sb.append(parts.get(i));\n    }\n    return sb;\n}",
    "public float clamp(float v) {\n    if (v < 0f) return 0f;\n    if (v > 1f) return 1f;\n    return v;\n}",
    "public void log(String fmt, Object... args) {\n    System.out.println(String.format(fmt, args));\n}",
]

# Tokens whose single deletion must break the method.
DELETABLE = ["{", "}", ";", "(", ")"]


def code_positions(code, ch):
    """Offsets of `ch` outside string and char literals."""
    positions = []
    i = 0
    quote = None
    while i < len(code):
        c = code[i]
        if quote:
            if c == "\\":
                i += 2
                continue
            if c == quote:
                quote = None
        elif c in "\"'":
            quote = c
        elif c == ch:
            positions.append(i)
        i += 1
    return positions


def mutate(code, index):
    """Deletes one structural token, cycling through DELETABLE by index."""
    for shift in range(len(DELETABLE)):
        ch = DELETABLE[(index + shift) % len(DELETABLE)]
        positions = code_positions(code, ch)
        if positions:
            pos = positions[(index * 7) % len(positions)]
            return code[:pos] + code[pos + 1:], ch
    raise ValueError("nothing to delete in " + code)


def write_jsonl(name, records):
    path = os.path.join(HERE, name)
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        for r in records:
            f.write(json.dumps(r, ensure_ascii=False) + "\n")


def syntax_fixtures():
    assert len(VALID_METHODS) == 50, len(VALID_METHODS)
    fidelity = []
    for i, code in enumerate(VALID_METHODS):
        fidelity.append({"id": "valid-%02d" % i, "code": code, "label": "valid"})
    mutants = []
    for i, code in enumerate(VALID_METHODS):
        broken, ch = mutate(code, i)
        mutants.append({"id": "invalid-%02d" % i, "code": broken, "label": "invalid",
                        "deleted": ch})
    write_jsonl("syntax_fidelity.jsonl", fidelity + mutants)

    # 94 valid and 6 invalid snippets for the validity arithmetic check.
    sv = []
    for i in range(94):
        sv.append({"id": "sv-%03d" % i, "code": VALID_METHODS[i % 50], "label": "valid"})
    for i in range(6):
        m = mutants[i * 8]
        sv.append({"id": "sv-%03d" % (94 + i), "code": m["code"], "label": "invalid"})
    write_jsonl("syntax_validity_94.jsonl", sv)


def abstraction_fixture():
    # Concrete methods: twenty inputs for the idempotence/preservation check.
    concrete = [m for m in VALID_METHODS if "METHOD_1" not in m]
    picks = concrete[:20]
    assert len(picks) == 20
    write_jsonl("abstraction20.jsonl",
                [{"id": "abs-%02d" % i, "code": c} for i, c in enumerate(picks)])


def track_fixture():
    """A small training run: 150 validation pairs, 3 checkpoints, loss log."""
    rng = random.Random(20260101)
    corpus = []
    for i in range(150):
        a, b = rng.randint(1, 9), rng.randint(1, 9)
        buggy = ("public int METHOD_1 ( int VAR_1 ) { if ( VAR_1 > %d ) { return VAR_1 - %d ; } "
                 "return VAR_2 ; }" % (a, b))
        fixed = buggy.replace("return VAR_2", "return VAR_1") if i % 3 else buggy.replace(
            "VAR_1 > %d" % a, "VAR_1 >= %d" % a)
        corpus.append({"id": "v%03d" % i, "buggy": buggy, "fixed": fixed, "split": "valid"})
    for i in range(20):
        corpus.append({"id": "t%03d" % i, "buggy": "int METHOD_1 ( ) { return %d ; }" % i,
                       "fixed": "int METHOD_1 ( ) { return %d ; }" % (i + 1), "split": "test"})
    predictions = []
    for step, copy_p, broken_p in [(500, 0.6, 0.11), (1000, 0.75, 0.08), (1500, 0.8, 0.06)]:
        for ex in corpus:
            if ex["split"] != "valid":
                continue
            r = rng.random()
            if r < broken_p:
                text = ex["buggy"][:-2]  # drop the closing brace
            elif r < broken_p + copy_p:
                text = ex["buggy"]
            elif r < broken_p + copy_p + 0.05:
                text = ex["fixed"]
            else:
                text = ex["buggy"].replace("return VAR_2 ;", "return 0 ;")
            predictions.append({"id": ex["id"], "step": step, "prediction": text})
            predictions.append({"id": ex["id"], "step": step, "prediction": ex["buggy"],
                                "rank": 1})
    write_jsonl("track/corpus.jsonl", corpus)
    write_jsonl("track/predictions.jsonl", predictions)
    write_jsonl("track/loss.jsonl", [
        {"step": 500, "train_loss": 0.5, "eval_loss": 0.41},
        {"step": 1000, "train_loss": 0.25, "eval_loss": 0.2},
        {"step": 1500, "train_loss": 0.126, "eval_loss": 0.076},
    ])


def behavior_fixture():
    """Ten triples: 8 verbatim copies, 2 modifications, 0 exact matches."""
    corpus = []
    predictions = []
    for i in range(10):
        buggy = "int VAR_5 = VAR_1 . METHOD_2 ( VAR_%d ) ;" % (i + 3)
        fixed = "int VAR_5 = VAR_2 . METHOD_2 ( VAR_%d ) ;" % (i + 3)
        corpus.append({"id": "case-%02d" % i, "buggy": buggy, "fixed": fixed, "split": "test"})
        if i < 8:
            pred = buggy
        else:
            pred = "int VAR_5 = VAR_1 . METHOD_3 ( VAR_%d ) ;" % (i + 3)
        predictions.append({"id": "case-%02d" % i, "step": 32730, "prediction": pred})
    write_jsonl("behavior10/corpus.jsonl", corpus)
    write_jsonl("behavior10/predictions.jsonl", predictions)


if __name__ == "__main__":
    syntax_fixtures()
    abstraction_fixture()
    track_fixture()
    behavior_fixture()
