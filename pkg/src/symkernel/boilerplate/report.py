REPORT_HEADER = """symkernel {version} report (schema {schema_version})
seed: {seed}
input: {input_hash}
result: {status}"""

SUITE_HEADER = "\n[{suite}]"

CHECK_LINE = "  {mark} {name} ({checked} checked)"

COUNTEREXAMPLE = "      counterexample: {payload}"

TIMING = "      {seconds:.3f}s"

LAW_LINE = "  {mark} {name}: {checked} instances, {mode}"

CHECK_RESULT = """{mark} {name}
checked: {checked}"""
