import tensorflow as tf


def augment(images):
    return images


ds = tf.data.Dataset.from_tensor_slices([1, 2, 3])
ds = ds.batch(2)
ds = ds.map(augment)  # expect: DPM001
