# Running scenarios from Python; the same thing as `hgl scenario <name>`.
from hgl.lab import BUILTINS, parse_scenario, run_builtin, run_scenario

print("built-in scenarios:", ", ".join(BUILTINS))

rep = run_builtin("veronese-ext2")
print(rep.to_csv())

text = """
ring R vars x y z
ideal m = x, y, z
functor tor i=1 first=quotient(m^n) second=quotient(m)
range 1 8
audit dim spread
"""
rep = run_scenario(parse_scenario(text), "three-variable tor")
print(rep.to_csv())
