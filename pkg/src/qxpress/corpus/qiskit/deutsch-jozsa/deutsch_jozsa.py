from qiskit import QuantumCircuit
from qiskit_aer import AerSimulator

N_QUBITS = 3


def constant_oracle(n):
    oracle = QuantumCircuit(n + 1)
    oracle.x(n)
    return oracle


def balanced_oracle(n):
    oracle = QuantumCircuit(n + 1)
    for qubit in range(n):
        oracle.cx(qubit, n)
    return oracle


def deutsch_jozsa_circuit(oracle, n):
    circuit = QuantumCircuit(n + 1, n)
    circuit.x(n)
    circuit.h(range(n + 1))
    circuit.compose(oracle, inplace=True)
    circuit.h(range(n))
    circuit.measure(range(n), range(n))
    return circuit


circuit = deutsch_jozsa_circuit(balanced_oracle(N_QUBITS), N_QUBITS)
counts = AerSimulator().run(circuit, shots=1024).result().get_counts()
print(counts)
