"""
The XOR / majority / Hamming baseline codec
===========================================

"""

from bladebind import CleanupMemory, classic_decode, classic_encode, gen_symbols, hamming

ROLES = ["name", "sex", "age"]
FILLERS = ["Pat", "male", "66"]
PAIRS = list(zip(ROLES, FILLERS))

# n = 1024, fillers unconstrained (k = n): binding is XOR, chunking is
# a bitwise majority vote with a seeded coin for ties.
table = gen_symbols(seed=3, n=1024, k=1024, role_names=ROLES, filler_names=FILLERS)
record = classic_encode(table, PAIRS, seed=0)
memory = CleanupMemory.from_table(table, "hamming")

# Majority voting is lossy: unbinding a role leaves the true filler
# plus ~n/4 bit flips of crosstalk from the other two pairs, and the
# Hamming clean-up absorbs that comfortably.
for role, filler in PAIRS:
    res = classic_decode(record.bits, table.roles[role], memory)
    print(f"{role:<5} -> {res.filler:<5} distance {res.distance:4d} of {table.n}")

noise = hamming(record.bits, table.roles["name"] ^ table.fillers["Pat"])
print("record vs the name pair alone:", noise, "flips")

# Retrieval accuracy over fresh tables:
trials, hits = 200, 0
for seed in range(trials):
    t = gen_symbols(seed=seed, n=1024, k=1024, role_names=ROLES, filler_names=FILLERS)
    r = classic_encode(t, PAIRS, seed=seed)
    mem = CleanupMemory.from_table(t, "hamming")
    hits += sum(
        classic_decode(r.bits, t.roles[role], mem).filler == filler
        for role, filler in PAIRS
    )
print(f"{hits}/{trials * len(PAIRS)} decodes correct")
