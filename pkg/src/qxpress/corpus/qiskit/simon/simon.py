from qiskit import QuantumCircuit
from qiskit_aer import AerSimulator

HIDDEN = "101"


def simon_oracle(hidden):
    n = len(hidden)
    oracle = QuantumCircuit(2 * n)
    for i in range(n):
        oracle.cx(i, n + i)
    flag = hidden[::-1].index("1")
    for i, bit in enumerate(reversed(hidden)):
        if bit == "1":
            oracle.cx(flag, n + i)
    return oracle


def simon_circuit(hidden):
    n = len(hidden)
    circuit = QuantumCircuit(2 * n, n)
    circuit.h(range(n))
    circuit.compose(simon_oracle(hidden), inplace=True)
    circuit.h(range(n))
    circuit.measure(range(n), range(n))
    return circuit


circuit = simon_circuit(HIDDEN)
counts = AerSimulator().run(circuit, shots=1024).result().get_counts()
print(counts)
