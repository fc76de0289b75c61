import sys

# Some tests stringify integers with hundreds of thousands of digits, which
# trips the interpreter's conversion guard at its default 4300.
sys.set_int_max_str_digits(1_000_000)
