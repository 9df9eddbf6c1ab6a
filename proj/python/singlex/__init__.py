# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#  http://www.apache.org/licenses/LICENSE-2.0
#
# THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
# KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
# WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
# MERCHANTABLITY OR NON-INFRINGEMENT.
# See the Apache 2 License for the specific language governing permissions and
# limitations under the License.

"""Phoneme confusion analysis, singing-adapted lexicons, and WER/CER scoring."""

import json as _json

from ._core import (
    Lexicon,
    MissingUtteranceError,
    OovError,
    ParseError,
    PhoneSet,
    SinglexError,
    UnknownPhonemeError,
    __version__,
    adapt_lexicon,
    align,
    confidence,
    edit_distance,
)
from . import _core


def analyze(hyps, refs, phoneset=None, topn=3):
    """Confidence table and category matrix for parallel phoneme sequences."""
    return _json.loads(_core.analyze_json(hyps, refs, phoneset, topn))


def word_error_report(hyps, refs):
    return _json.loads(_core.word_error_report_json(hyps, refs))


def char_error_report(hyps, refs):
    return _json.loads(_core.char_error_report_json(hyps, refs))


def subset_word_report(hyps, refs, lexicon, finals=("D", "T", "DH", "Z"),
                       exclude_insertions=False):
    return _json.loads(_core.subset_word_report_json(
        hyps, refs, lexicon, list(finals), exclude_insertions))


def vowel_error_report(hyps, refs, phoneset=None, exclude_insertions=False):
    return _json.loads(_core.vowel_error_report_json(
        hyps, refs, phoneset, exclude_insertions))


__all__ = [
    "Lexicon",
    "MissingUtteranceError",
    "OovError",
    "ParseError",
    "PhoneSet",
    "SinglexError",
    "UnknownPhonemeError",
    "adapt_lexicon",
    "align",
    "analyze",
    "char_error_report",
    "confidence",
    "edit_distance",
    "subset_word_report",
    "vowel_error_report",
    "word_error_report",
]
