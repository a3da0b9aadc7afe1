"""Regenerates the high-precision constants frozen in the test suite.

Needs mpmath. Prints each value to 20 significant digits.
"""
import mpmath as mp

mp.mp.dps = 60


def show(label, value):
    print(f"{label:<40} {mp.nstr(value, 20)}")


ln_a = 1 / mp.mpf(12) - mp.zeta(-1, derivative=1)
show("ln A", ln_a)

show("int_0^inf x ln x / (e^{2 pi x} - 1)", mp.quad(lambda x: x * mp.log(x) / mp.expm1(2 * mp.pi * x), [0, 1, mp.inf]))
show("int_0^{1/2} ln Gamma(x + 1)", mp.quad(lambda x: mp.loggamma(x + 1), [0, 0.5]))
show("Binet integral (ln A - ln2/9 - 1/24) * 3/2", (ln_a - mp.log(2) / 9 - mp.mpf(1) / 24) * 1.5)


def theta(x):
    return mp.loggamma(x + 1) - x * mp.log(x) + x - mp.log(2 * mp.pi * x) / 2


show("theta(0.5)", theta(mp.mpf("0.5")))
show("theta(50)", theta(mp.mpf(50)))

for x in ["0.001", "0.1", "0.25", "0.5", "0.75", "0.999", "1.001", "1.5", "2", "2.5",
          "3.7", "5", "7.25", "9.9", "10", "19.5", "25", "48"]:
    # Evaluated at the double nearest x, which is what the tests pass in.
    show(f"ln Gamma({x} + 1)", mp.loggamma(mp.mpf(float(x)) + 1))
