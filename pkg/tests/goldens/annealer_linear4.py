# generated-by: isingforge annealer v1
# Ising ground-state sampling for a 4-qubit problem.
# Desk-scale reference schedule: sweeps=1000, t_initial=10.0, t_final=0.01.
# Requires: dwave-system.

from dwave.system import DWaveSampler, EmbeddingComposite

NUM_QUBITS = 4
reads = 100

h = {}
h[0] = 1.0  # field 0
h[1] = 1.0  # field 1
h[2] = 1.0  # field 2
h[3] = 1.0  # field 3

J = {}
J[(0, 1)] = 1.0  # coupler 0-1
J[(1, 2)] = 1.0  # coupler 1-2
J[(2, 3)] = 1.0  # coupler 2-3


def main():
    sampler = EmbeddingComposite(DWaveSampler())
    result = sampler.sample_ising(h, J, num_reads=reads)
    lowest = result.first
    bits = "".join("0" if lowest.sample[q] > 0 else "1" for q in range(NUM_QUBITS))
    print(f"config={bits}")
    print(f"energy={lowest.energy}")


main()
