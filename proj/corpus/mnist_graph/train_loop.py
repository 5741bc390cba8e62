import tensorflow as tf

x = tf.placeholder(tf.float32, [None, 784])
w = tf.Variable(tf.zeros([784, 10]))
b = tf.Variable(tf.zeros([10]))
sess = tf.Session()
for step in range(100):
    logits = tf.matmul(x, w) + b  # expect: RNC001
    sess.run(logits)
