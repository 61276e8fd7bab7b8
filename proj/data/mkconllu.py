#!/usr/bin/env python3
# Copyright 2026 The Framelog Authors.
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

"""Expands compact dependency notation into CoNLL-U.

Input: one sentence per block.

    > Mary buys a car
    Mary/PROPN/2/nsubj buys/VERB/0/root/buy a/DET/4/det car/NOUN/2/obj

Each token is form/UPOS/head/deprel with an optional fifth lemma field.
The default lemma is the form for proper nouns and typed variables and the
lowercased form otherwise. Lines starting with '#' are comments.

Usage: mkconllu.py input.dep > output.conllu
"""

import sys


def expand(lines):
    out = []
    text = None
    for raw in lines:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith(">"):
            text = line[1:].strip()
            continue
        if text is None:
            raise SystemExit(f"token line before any '>' sentence: {line}")
        out.append(f"# text = {text}")
        for i, tok in enumerate(line.split(), start=1):
            parts = tok.split("/")
            if len(parts) not in (4, 5):
                raise SystemExit(f"bad token {tok!r} in {text!r}")
            form, upos, head, deprel = parts[:4]
            if len(parts) == 5:
                lemma = parts[4]
            elif upos == "PROPN" or form.startswith("$"):
                lemma = form
            else:
                lemma = form.lower()
            out.append("\t".join([str(i), form, lemma, upos, "_", "_", head, deprel, "_", "_"]))
        out.append("")
        text = None
    return "\n".join(out)


def main():
    if len(sys.argv) != 2:
        raise SystemExit(__doc__)
    with open(sys.argv[1], encoding="utf-8") as f:
        sys.stdout.write(expand(f))


if __name__ == "__main__":
    main()
