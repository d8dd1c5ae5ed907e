# chanest: learned OFDM channel estimation and sample-complexity analysis
# Copyright (C) 2026 The chanest authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ------------------------------------------------------------------------

import sys

try:
    import chanest  # noqa: F401
    import pytest
except ImportError:
    print("python package not installed; skipping")
    sys.exit(77)

sys.exit(pytest.main(["-q", sys.argv[1]]))
