#!/usr/bin/env python3
# Copyright 2026 The hypermc Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""Converts the 2013 high-school contact log into a hyperedge list.

Input lines read "t a b class_a class_b" (one 20-second contact per line).
Within each timestamp the contacts form a graph; every maximal clique of size
>= 2 becomes a hyperedge. Hyperedges are deduplicated across timestamps.

Node ids are remapped to 1..n in increasing order of the original id and each
node's class becomes an integer label (classes numbered in sorted name order).
"""

import argparse
import collections
import sys

import networkx as nx


def read_contacts(path):
    by_time = collections.defaultdict(list)
    classes = {}
    with open(path) as f:
        for lineno, line in enumerate(f, 1):
            parts = line.split()
            if not parts:
                continue
            if len(parts) != 5:
                sys.exit(f"{path}:{lineno}: expected 't a b class_a class_b'")
            t, a, b = int(parts[0]), int(parts[1]), int(parts[2])
            for node, cls in ((a, parts[3]), (b, parts[4])):
                if classes.setdefault(node, cls) != cls:
                    sys.exit(f"{path}:{lineno}: node {node} changes class")
            by_time[t].append((a, b))
    return by_time, classes


def maximal_cliques(by_time):
    edges = set()
    for t in sorted(by_time):
        g = nx.Graph()
        g.add_edges_from((a, b) for a, b in by_time[t] if a != b)
        for clique in nx.find_cliques(g):
            if len(clique) >= 2:
                edges.add(tuple(sorted(clique)))
    return edges


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("contacts", help="High-School_data_2013.csv")
    ap.add_argument("output", help="hyperedge list to write")
    args = ap.parse_args()

    by_time, classes = read_contacts(args.contacts)
    hyperedges = maximal_cliques(by_time)
    nodes = sorted(classes)
    index = {v: i + 1 for i, v in enumerate(nodes)}
    names = sorted(set(classes.values()))
    class_index = {c: i + 1 for i, c in enumerate(names)}

    rows = sorted((len(e), sorted(index[v] for v in e)) for e in hyperedges)
    sizes = collections.Counter(size for size, _ in rows)
    with open(args.output, "w") as out:
        out.write("# hypermc-format v1\n")
        out.write("# contact-high-school: maximal cliques of each 20 s contact snapshot\n")
        out.write("# source: SocioPatterns high-school contact data (2013), see data/README.md\n")
        out.write("# sizes: " + " ".join(f"{k}:{sizes[k]}" for k in sorted(sizes)) + "\n")
        out.write("# classes: " + " ".join(f"{class_index[c]}={c}" for c in names) + "\n")
        out.write(f"#nodes {len(nodes)}\n")
        for _, members in rows:
            out.write(" ".join(map(str, members)) + "\n")
        out.write("#labels\n")
        for v in nodes:
            out.write(f"{index[v]} {class_index[classes[v]]}\n")
    print(f"{len(nodes)} nodes, {len(names)} classes, hyperedges by size {dict(sorted(sizes.items()))}")


if __name__ == "__main__":
    main()
