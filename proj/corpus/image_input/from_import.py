from tensorflow.data import Dataset


def gen():
    yield 1


def double(x):
    return x * 2


ds = Dataset.from_generator(gen, output_types=None)
ds = ds.map(double)  # expect: MOB001, DPM001
ds = ds.batch(4)
