import tensorflow as tf


def pack(features, label):
    return features, label


ds = tf.data.experimental.make_csv_dataset("train.csv", batch_size=1)
ds = ds.unbatch()
ds = ds.map(pack)  # expect: MOB001, DPM001
ds = ds.batch(256)
