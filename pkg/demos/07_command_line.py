"""
Driving the command line
========================
"""
import json
import subprocess
import sys

cli = [sys.executable, "-m", "fusionkit"]

out = subprocess.run(cli + ["fusion", "--n", "2", "--level", "4", "--format", "json"],
                     capture_output=True, text=True, check=True).stdout
doc = json.loads(out)
print(doc["algebra"], "weights", doc["weights"])

print(subprocess.run(cli + ["nimrep", "--n", "3", "--level", "3"],
                     capture_output=True, text=True).stdout)

res = subprocess.run(cli + ["verify", "--n", "3", "--level", "5"], capture_output=True, text=True)
print(res.stdout.splitlines()[-1], "exit", res.returncode)

# nimrep only exists for SU(3)
res = subprocess.run(cli + ["nimrep", "--n", "2", "--level", "3"], capture_output=True, text=True)
print("usage error exit", res.returncode)
