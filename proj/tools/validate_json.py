#!/usr/bin/env python3
#  Copyright 2026 The radford-hopf Authors
#
#  Licensed under the Apache License, Version 2.0 (the "License");
#  you may not use this file except in compliance with the License.
#  You may obtain a copy of the License at
#
#  http://www.apache.org/licenses/LICENSE-2.0
#
#  Unless required by applicable law or agreed to in writing, software
#  distributed under the License is distributed on an "AS IS" BASIS,
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#  See the License for the specific language governing permissions and
#  limitations under the License.
"""Validate a JSON document against one definition of radford.schema.json.

usage: validate_json.py SCHEMA_FILE DEFINITION [DOCUMENT]

Reads the document from stdin when DOCUMENT is omitted. Exits 0 when the
document is valid and 1 otherwise, printing the first error.
"""
import json
import sys

import jsonschema


def main(argv):
    if len(argv) not in (3, 4):
        print(__doc__, file=sys.stderr)
        return 2
    with open(argv[1], encoding="utf-8") as f:
        root = json.load(f)
    definition = argv[2]
    if definition not in root["$defs"]:
        print(f"unknown definition {definition}", file=sys.stderr)
        return 2
    if len(argv) == 4:
        with open(argv[3], encoding="utf-8") as f:
            document = json.load(f)
    else:
        document = json.load(sys.stdin)
    schema = {"$schema": root["$schema"], "$defs": root["$defs"], "$ref": f"#/$defs/{definition}"}
    cls = jsonschema.validators.validator_for(schema)
    cls.check_schema(root)
    errors = sorted(cls(schema).iter_errors(document), key=lambda e: list(e.path))
    if errors:
        e = errors[0]
        print(f"{definition}: {e.message} at {list(e.absolute_path)}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
